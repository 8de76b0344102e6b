#include "spbaw/labels.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace spbaw {

namespace {

// Every choice of one entry from each list, first list varying slowest.
template <class T>
std::vector<std::vector<T>> cartesian(const std::vector<std::vector<T>>& lists) {
  std::vector<std::vector<T>> out{{}};
  for (const auto& list : lists) {
    std::vector<std::vector<T>> next;
    next.reserve(out.size() * list.size());
    for (const auto& prefix : out) {
      for (const auto& item : list) {
        next.push_back(prefix);
        next.back().push_back(item);
      }
    }
    out = std::move(next);
  }
  return out;
}

bool wants_defect(const PolyClass& c, int eta_plus, int d) {
  if (c.is_x_minus_one()) return d % 2 == 1;
  return d % 4 == (eta_plus == 1 ? 0 : 2);
}

int symbol_rank_for(const PolyClass& c, int m) { return c.is_x_minus_one() ? (m - 1) / 2 : m / 2; }

// Every shape of the right size / rank / defect class for the k-th support entry.
std::vector<Shape> all_shapes(const SemisimpleLabel& s, std::size_t k) {
  const auto& [c, m] = s.mult[k];
  std::vector<Shape> out;
  if (c.family() != Family::F0) {
    for (auto& p : enumerate_partitions(m)) out.emplace_back(std::move(p));
  } else {
    const int eta = s.eta_plus;
    for (auto& l : enumerate_symbols(symbol_rank_for(c, m), [&](int d) { return wants_defect(c, eta, d); })) {
      out.emplace_back(std::move(l));
    }
  }
  return out;
}

Shape core_of(const FieldContext& ctx, const PolyClass& c, const Shape& x) {
  if (c.family() != Family::F0) {
    return e_core_quotient(std::get<Partition>(x), static_cast<int>(c.e_gamma())).core;
  }
  return decompose(std::get<LSymbol>(x), static_cast<int>(ctx.e), symbol_mode(ctx)).core;
}

void require_aligned(const SemisimpleLabel& s, std::size_t n, const char* what) {
  if (s.mult.size() != n) throw std::invalid_argument(std::string(what) + ": component count does not match the support");
}

}  // namespace

int SemisimpleLabel::m(const PolyClass& c) const {
  for (const auto& [g, k] : mult) {
    if (g == c) return k;
  }
  return 0;
}

std::optional<std::size_t> SemisimpleLabel::index_minus() const {
  for (std::size_t k = 0; k < mult.size(); ++k) {
    if (mult[k].first.is_x_minus_one()) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> SemisimpleLabel::index_plus() const {
  for (std::size_t k = 0; k < mult.size(); ++k) {
    if (mult[k].first.is_x_plus_one()) return k;
  }
  return std::nullopt;
}

int SemisimpleLabel::dimension() const {
  int d = 0;
  for (const auto& [c, k] : mult) d += k * c.deg();
  return d;
}

SymMode symbol_mode(const FieldContext& ctx) { return ctx.epsilon == 1 ? SymMode::Hook : SymMode::Cohook; }

std::vector<SemisimpleLabel> enumerate_semisimple(const FieldContext& ctx, unsigned n, bool ell_prime_only) {
  if (n == 0) throw std::invalid_argument("enumerate_semisimple: n must be positive");
  ctx.require_rank_bound(n);
  const auto classes = enumerate_classes(ctx, 2 * n, ell_prime_only);
  const int total = 2 * static_cast<int>(n) + 1;
  std::vector<SemisimpleLabel> out;
  std::vector<std::pair<PolyClass, int>> cur;

  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int rest) {
    if (rest == 0) {
      SemisimpleLabel s;
      s.mult = cur;
      std::sort(s.mult.begin(), s.mult.end());
      int eta_rest = kEtaMinusConstant;
      for (const auto& [c, m] : s.mult) {
        if (c.family() != Family::F0 && c.sign() == -1 && m % 2 == 1) eta_rest = -eta_rest;
      }
      if (s.index_plus()) {
        for (int eta : {1, -1}) {
          s.eta_plus = eta;
          s.eta_minus = eta_rest * eta;
          out.push_back(s);
        }
      } else {
        s.eta_plus = 0;
        s.eta_minus = eta_rest;
        out.push_back(s);
      }
      return;
    }
    if (idx == classes.size()) return;
    const PolyClass& c = classes[idx];
    const int deg = c.deg();
    int lo = 0, step = 1;
    if (c.is_x_minus_one()) {
      lo = 1;
      step = 2;
    } else if (c.is_x_plus_one()) {
      step = 2;
    }
    for (int m = lo; m * deg <= rest; m += step) {
      if (m > 0) cur.emplace_back(c, m);
      rec(idx + 1, rest - m * deg);
      if (m > 0) cur.pop_back();
    }
  };
  rec(0, total);
  return out;
}

LSymbol plus_symbol(const SemisimpleLabel& s, const std::vector<Shape>& shapes) {
  const auto k = s.index_plus();
  if (!k) return LSymbol{};
  return std::get<LSymbol>(shapes.at(*k));
}

int tuple_length(const FieldContext& ctx, const PolyClass& c) {
  (void)ctx;
  return static_cast<int>(c.beta() * c.e_gamma());
}

int weight_of(const FieldContext& ctx, const BlockLabel& b, std::size_t k) {
  require_aligned(b.s, b.kappa.size(), "weight_of");
  const auto& [c, m] = b.s.mult.at(k);
  int diff = 0;
  int unit = 0;
  if (c.family() != Family::F0) {
    diff = m - size(std::get<Partition>(b.kappa[k]));
    unit = static_cast<int>(c.e_gamma());
  } else {
    const int rk = std::get<LSymbol>(b.kappa[k]).rank();
    diff = m - 2 * rk - (c.is_x_minus_one() ? 1 : 0);
    unit = 2 * static_cast<int>(ctx.e);
  }
  if (diff < 0 || diff % unit != 0) {
    throw std::invalid_argument("weight_of: no nonnegative integral weight for " + to_string(c.gamma()));
  }
  return diff / unit;
}

std::vector<int> weights_of(const FieldContext& ctx, const BlockLabel& b) {
  std::vector<int> w;
  for (std::size_t k = 0; k < b.s.mult.size(); ++k) w.push_back(weight_of(ctx, b, k));
  return w;
}

std::vector<BlockLabel> blocks_for(const FieldContext& ctx, const SemisimpleLabel& s) {
  std::vector<std::vector<Shape>> choices;
  for (std::size_t k = 0; k < s.mult.size(); ++k) {
    std::set<Shape> cores;
    for (const auto& x : all_shapes(s, k)) cores.insert(core_of(ctx, s.mult[k].first, x));
    choices.emplace_back(cores.begin(), cores.end());
  }
  std::vector<BlockLabel> out;
  for (auto& kappa : cartesian(choices)) {
    BlockLabel b{s, std::move(kappa), 0};
    const bool split = !plus_symbol(s, b.kappa).is_degenerate();
    out.push_back(b);
    if (split) {
      b.i = 1;
      out.push_back(std::move(b));
    }
  }
  return out;
}

std::vector<BlockLabel> enumerate_blocks(const FieldContext& ctx, unsigned n) {
  std::vector<BlockLabel> out;
  for (const auto& s : enumerate_semisimple(ctx, n, true)) {
    auto bs = blocks_for(ctx, s);
    out.insert(out.end(), std::make_move_iterator(bs.begin()), std::make_move_iterator(bs.end()));
  }
  return out;
}

std::vector<IBrLabel> enumerate_ibr(const FieldContext& ctx, const BlockLabel& b) {
  require_aligned(b.s, b.kappa.size(), "enumerate_ibr");
  const SymMode mode = symbol_mode(ctx);
  const int e = static_cast<int>(ctx.e);
  std::vector<std::vector<Shape>> choices;
  for (std::size_t k = 0; k < b.s.mult.size(); ++k) {
    const auto& [c, m] = b.s.mult[k];
    const int w = weight_of(ctx, b, k);
    std::vector<Shape> list;
    if (c.family() != Family::F0) {
      const auto& kappa = std::get<Partition>(b.kappa[k]);
      for (const auto& t : enumerate_tuples(static_cast<int>(c.e_gamma()), w)) list.emplace_back(from_core_quotient(kappa, t));
    } else {
      const auto& kappa = std::get<LSymbol>(b.kappa[k]);
      std::set<LSymbol> seen;
      for (const auto& oq : enumerate_tuples(2 * e, w)) seen.insert(star_plain(kappa, oq, mode));
      for (const auto& l : seen) {
        if (l.rank() != symbol_rank_for(c, m) || !wants_defect(c, b.s.eta_plus, l.defect())) {
          throw std::logic_error("enumerate_ibr: reconstructed symbol has the wrong rank or defect class");
        }
        list.emplace_back(l);
      }
    }
    choices.push_back(std::move(list));
  }
  const bool kappa_split = !plus_symbol(b.s, b.kappa).is_degenerate();
  std::vector<IBrLabel> out;
  for (auto& lambda : cartesian(choices)) {
    IBrLabel x{b.s, std::move(lambda), b.i};
    const bool lambda_split = !plus_symbol(b.s, x.lambda).is_degenerate();
    if (kappa_split) {
      if (!lambda_split) throw std::logic_error("enumerate_ibr: degenerate symbol over a non-degenerate core");
      out.push_back(std::move(x));
    } else {
      x.j = 0;
      out.push_back(x);
      if (lambda_split) {
        x.j = 1;
        out.push_back(std::move(x));
      }
    }
  }
  return out;
}

std::vector<IBrLabel> enumerate_ibr_universe(const FieldContext& ctx, unsigned n) {
  std::vector<IBrLabel> out;
  for (const auto& s : enumerate_semisimple(ctx, n, true)) {
    std::vector<std::vector<Shape>> choices;
    for (std::size_t k = 0; k < s.mult.size(); ++k) choices.push_back(all_shapes(s, k));
    for (auto& lambda : cartesian(choices)) {
      IBrLabel x{s, std::move(lambda), 0};
      const bool split = !plus_symbol(s, x.lambda).is_degenerate();
      out.push_back(x);
      if (split) {
        x.j = 1;
        out.push_back(std::move(x));
      }
    }
  }
  return out;
}

BlockLabel block_of(const FieldContext& ctx, const IBrLabel& x) {
  require_aligned(x.s, x.lambda.size(), "block_of");
  BlockLabel b{x.s, {}, 0};
  for (std::size_t k = 0; k < x.s.mult.size(); ++k) b.kappa.push_back(core_of(ctx, x.s.mult[k].first, x.lambda[k]));
  b.i = plus_symbol(b.s, b.kappa).is_degenerate() ? 0 : x.j;
  return b;
}

std::vector<WeightLabelQ> enumerate_weights_Q(const FieldContext& ctx, const BlockLabel& b) {
  std::vector<std::vector<std::vector<Partition>>> choices;
  for (std::size_t k = 0; k < b.s.mult.size(); ++k) {
    choices.push_back(enumerate_tuples(tuple_length(ctx, b.s.mult[k].first), weight_of(ctx, b, k)));
  }
  std::vector<WeightLabelQ> out;
  for (auto& q : cartesian(choices)) out.push_back({b, std::move(q)});
  return out;
}

std::vector<WeightLabelK> enumerate_weights_K(const FieldContext& ctx, const BlockLabel& b) {
  const int ell = static_cast<int>(ctx.ell);
  std::map<int, std::vector<CoreTower>> towers;
  auto towers_of = [&](int w) -> const std::vector<CoreTower>& {
    auto it = towers.find(w);
    if (it == towers.end()) it = towers.emplace(w, enumerate_towers(ell, w)).first;
    return it->second;
  };

  std::vector<std::vector<std::vector<CoreTower>>> choices;
  for (std::size_t k = 0; k < b.s.mult.size(); ++k) {
    const int branches = tuple_length(ctx, b.s.mult[k].first);
    const int w = weight_of(ctx, b, k);
    std::vector<std::vector<CoreTower>> list;
    // Weak compositions of w over the branches, then a tower of each part's weight.
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int branch, int rest) {
      if (branch + 1 == branches) {
        parts.push_back(rest);
        std::vector<std::vector<CoreTower>> per_branch;
        for (int p : parts) per_branch.push_back(towers_of(p));
        for (auto& combo : cartesian(per_branch)) list.push_back(std::move(combo));
        parts.pop_back();
        return;
      }
      for (int p = rest; p >= 0; --p) {
        parts.push_back(p);
        rec(branch + 1, rest - p);
        parts.pop_back();
      }
    };
    rec(0, w);
    choices.push_back(std::move(list));
  }
  std::vector<WeightLabelK> out;
  for (auto& kk : cartesian(choices)) out.push_back({b, std::move(kk)});
  return out;
}

WeightLabelQ K_to_Q(const FieldContext& ctx, const WeightLabelK& wk) {
  require_aligned(wk.block.s, wk.K.size(), "K_to_Q");
  const int ell = static_cast<int>(ctx.ell);
  WeightLabelQ out{wk.block, {}};
  for (const auto& branches : wk.K) {
    std::vector<Partition> tuple;
    for (const auto& t : branches) tuple.push_back(tower_to_partition(t, ell));
    out.Q.push_back(std::move(tuple));
  }
  return out;
}

WeightLabelK Q_to_K(const FieldContext& ctx, const WeightLabelQ& wq) {
  require_aligned(wq.block.s, wq.Q.size(), "Q_to_K");
  const int ell = static_cast<int>(ctx.ell);
  WeightLabelK out{wq.block, {}};
  for (const auto& tuple : wq.Q) {
    std::vector<CoreTower> branches;
    for (const auto& p : tuple) branches.push_back(core_tower(p, ell));
    out.K.push_back(std::move(branches));
  }
  return out;
}

std::vector<ShapeEntry> radical_shape(const FieldContext& ctx, const WeightLabelK& wk) {
  (void)ctx;
  require_aligned(wk.block.s, wk.K.size(), "radical_shape");
  std::vector<ShapeEntry> out;
  for (std::size_t k = 0; k < wk.K.size(); ++k) {
    for (std::size_t b = 0; b < wk.K[k].size(); ++b) {
      const auto& levels = wk.K[k][b].levels;
      for (std::size_t d = 0; d < levels.size(); ++d) {
        const int t = tuple_size(levels[d]);
        if (t > 0) out.push_back({wk.block.s.mult[k].first, static_cast<int>(d), static_cast<int>(b), t});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace spbaw
