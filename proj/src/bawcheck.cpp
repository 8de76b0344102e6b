#include "spbaw/bawcheck.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace spbaw {

namespace {

template <class T>
std::vector<T> permuted(const std::vector<T>& v, const std::vector<std::size_t>& to) {
  std::vector<T> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[to[k]] = v[k];
  return out;
}

struct Relabel {
  SemisimpleLabel s;
  std::vector<std::size_t> to;  // old support index -> new support index
};

Relabel relabel(const FieldContext& ctx, const SemisimpleLabel& s, std::uint64_t power) {
  std::vector<std::pair<PolyClass, int>> images;
  for (const auto& [c, m] : s.mult) images.emplace_back(frobenius(c, power, ctx), m);
  std::vector<std::size_t> order(images.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return images[a] < images[b]; });
  Relabel r;
  r.s = s;
  r.s.mult.clear();
  r.to.assign(images.size(), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    r.s.mult.push_back(images[order[pos]]);
    r.to[order[pos]] = pos;
  }
  return r;
}

std::string describe(const IBrLabel& x) {
  std::string out = "s=[";
  for (const auto& [c, m] : x.s.mult) out += to_string(c.gamma()) + "^" + std::to_string(m) + " ";
  out += "] eta+=" + std::to_string(x.s.eta_plus) + " j=" + std::to_string(x.j) + " lambda=[";
  for (const auto& sh : x.lambda) {
    if (const auto* p = std::get_if<Partition>(&sh)) {
      out += "(";
      for (int v : *p) out += std::to_string(v) + ",";
      out += ")";
    } else {
      const auto& l = std::get<LSymbol>(sh);
      out += "{";
      for (int v : l.first()) out += std::to_string(v) + ",";
      out += "|";
      for (int v : l.second()) out += std::to_string(v) + ",";
      out += "}";
    }
    out += " ";
  }
  return out + "]";
}

bool equivariant_at(const FieldContext& ctx, const AutAction& a, const IBrLabel& x) {
  const IBrLabel ax = act_on_ibr(ctx, a, x);
  if (brauer_to_weight(ctx, ax) != act_on_weight(ctx, a, brauer_to_weight(ctx, x))) return false;
  return block_of(ctx, ax) == act_on_block(ctx, a, block_of(ctx, x));
}

}  // namespace

std::string AutAction::name() const {
  return kind == Kind::Diagonal ? std::string("diagonal") : "field(" + std::to_string(power) + ")";
}

std::vector<AutAction> default_generators() { return {AutAction::field(1), AutAction::diagonal()}; }

WeightLabelQ brauer_to_weight(const FieldContext& ctx, const IBrLabel& x) {
  const SymMode mode = symbol_mode(ctx);
  const int e = static_cast<int>(ctx.e);
  WeightLabelQ out{block_of(ctx, x), {}};
  const BlockLabel& b = out.block;
  for (std::size_t k = 0; k < x.s.mult.size(); ++k) {
    const PolyClass& c = x.s.mult[k].first;
    if (c.family() != Family::F0) {
      out.Q.push_back(e_core_quotient(std::get<Partition>(x.lambda[k]), static_cast<int>(c.e_gamma())).quotient);
      continue;
    }
    const auto& lambda = std::get<LSymbol>(x.lambda[k]);
    const auto& kappa = std::get<LSymbol>(b.kappa[k]);
    const auto d = decompose(lambda, e, mode);
    OrderedQuotient q;
    LSymbol rebuilt;
    if (c.is_x_minus_one()) {
      q = d.quotient_seq;
      rebuilt = star_plain(kappa, q, mode);
    } else if (!kappa.is_degenerate()) {
      q = b.i == 0 ? d.quotient_seq : swap_halves(d.quotient_seq);
      rebuilt = star_oriented(kappa, b.i, q, mode);
    } else {
      q = ordered(d.quotient(), x.j);
      rebuilt = star_plain(kappa, q, mode);
    }
    if (rebuilt != lambda) throw std::logic_error("brauer_to_weight: ordered quotient does not rebuild the symbol");
    out.Q.push_back(std::move(q));
  }
  return out;
}

IBrLabel weight_to_brauer(const FieldContext& ctx, const WeightLabelQ& w) {
  const BlockLabel& b = w.block;
  if (w.Q.size() != b.s.mult.size() || b.kappa.size() != b.s.mult.size()) {
    throw std::invalid_argument("weight_to_brauer: component count does not match the support");
  }
  const SymMode mode = symbol_mode(ctx);
  IBrLabel out{b.s, {}, b.i};
  for (std::size_t k = 0; k < b.s.mult.size(); ++k) {
    const PolyClass& c = b.s.mult[k].first;
    const auto& q = w.Q[k];
    if (static_cast<int>(q.size()) != tuple_length(ctx, c)) {
      throw std::invalid_argument("weight_to_brauer: tuple for " + to_string(c.gamma()) + " has the wrong length");
    }
    for (const auto& p : q) {
      if (!is_partition(p)) throw std::invalid_argument("weight_to_brauer: tuple entry is not a partition");
    }
    if (tuple_size(q) != weight_of(ctx, b, k)) {
      throw std::invalid_argument("weight_to_brauer: tuple for " + to_string(c.gamma()) + " has the wrong total size");
    }
    if (c.family() != Family::F0) {
      out.lambda.emplace_back(from_core_quotient(std::get<Partition>(b.kappa[k]), q));
      continue;
    }
    const auto& kappa = std::get<LSymbol>(b.kappa[k]);
    if (c.is_x_plus_one() && !kappa.is_degenerate()) {
      out.lambda.emplace_back(star_oriented(kappa, b.i, q, mode));
    } else {
      out.lambda.emplace_back(star_plain(kappa, q, mode));
      if (c.is_x_plus_one()) out.j = q == ordered(unordered(q), 0) ? 0 : 1;
    }
  }
  if (!out.s.index_plus()) out.j = 0;
  return out;
}

SemisimpleLabel act_on_semisimple(const FieldContext& ctx, const AutAction& a, const SemisimpleLabel& s) {
  if (a.kind == AutAction::Kind::Diagonal) return s;
  return relabel(ctx, s, a.power).s;
}

BlockLabel act_on_block(const FieldContext& ctx, const AutAction& a, const BlockLabel& b) {
  if (a.kind == AutAction::Kind::Diagonal) {
    BlockLabel out = b;
    if (!plus_symbol(b.s, b.kappa).is_degenerate()) out.i = 1 - b.i;
    return out;
  }
  const Relabel r = relabel(ctx, b.s, a.power);
  return {r.s, permuted(b.kappa, r.to), b.i};
}

IBrLabel act_on_ibr(const FieldContext& ctx, const AutAction& a, const IBrLabel& x) {
  if (a.kind == AutAction::Kind::Diagonal) {
    IBrLabel out = x;
    if (!plus_symbol(x.s, x.lambda).is_degenerate()) out.j = 1 - x.j;
    return out;
  }
  const Relabel r = relabel(ctx, x.s, a.power);
  return {r.s, permuted(x.lambda, r.to), x.j};
}

WeightLabelQ act_on_weight(const FieldContext& ctx, const AutAction& a, const WeightLabelQ& w) {
  if (a.kind == AutAction::Kind::Diagonal) {
    WeightLabelQ out{act_on_block(ctx, a, w.block), w.Q};
    if (const auto k = w.block.s.index_plus()) out.Q[*k] = swap_halves(w.Q[*k]);
    return out;
  }
  const Relabel r = relabel(ctx, w.block.s, a.power);
  return {act_on_block(ctx, a, w.block), permuted(w.Q, r.to)};
}

WeightLabelK act_on_weight(const FieldContext& ctx, const AutAction& a, const WeightLabelK& w) {
  if (a.kind == AutAction::Kind::Diagonal) {
    WeightLabelK out{act_on_block(ctx, a, w.block), w.K};
    if (const auto k = w.block.s.index_plus()) {
      const std::size_t branches = w.K[*k].size();
      const std::size_t e = branches / 2;
      for (std::size_t b = 0; b < branches; ++b) out.K[*k][(b + e) % branches] = w.K[*k][b];
    }
    return out;
  }
  const Relabel r = relabel(ctx, w.block.s, a.power);
  return {act_on_block(ctx, a, w.block), permuted(w.K, r.to)};
}

BlockReport verify_block(const FieldContext& ctx, const BlockLabel& b, const std::vector<AutAction>& generators) {
  BlockReport rep;
  const auto ibr = enumerate_ibr(ctx, b);
  const auto wq = enumerate_weights_Q(ctx, b);
  const auto wk = enumerate_weights_K(ctx, b);
  rep.n_ibr = ibr.size();
  rep.n_weights_Q = wq.size();
  rep.n_weights_K = wk.size();

  try {
    std::vector<WeightLabelQ> images;
    images.reserve(ibr.size());
    for (const auto& x : ibr) images.push_back(brauer_to_weight(ctx, x));
    const std::set<WeightLabelQ> image_set(images.begin(), images.end());
    const std::set<WeightLabelQ> target(wq.begin(), wq.end());
    rep.bijective = image_set.size() == ibr.size() && image_set == target && target.size() == wq.size();

    bool inv = true;
    for (std::size_t t = 0; t < ibr.size() && inv; ++t) inv = weight_to_brauer(ctx, images[t]) == ibr[t];
    for (std::size_t t = 0; t < wq.size() && inv; ++t) inv = brauer_to_weight(ctx, weight_to_brauer(ctx, wq[t])) == wq[t];
    rep.inverse_ok = inv;
  } catch (const std::exception&) {
    rep.bijective = false;
    rep.inverse_ok = false;
  }

  std::set<WeightLabelQ> from_k;
  bool round = true;
  for (const auto& k : wk) {
    auto q = K_to_Q(ctx, k);
    round = round && Q_to_K(ctx, q) == k;
    from_k.insert(std::move(q));
  }
  rep.k_forms_match = round && from_k.size() == wk.size() && from_k == std::set<WeightLabelQ>(wq.begin(), wq.end());

  bool eq = true;
  for (const auto& a : generators) {
    for (std::size_t t = 0; t < ibr.size() && eq; ++t) {
      try {
        eq = equivariant_at(ctx, a, ibr[t]);
      } catch (const std::exception&) {
        eq = false;
      }
    }
  }
  rep.equivariant = eq;
  return rep;
}

EquivarianceReport verify_equivariance(const FieldContext& ctx, unsigned n, const std::vector<AutAction>& generators) {
  EquivarianceReport rep;
  const auto universe = enumerate_ibr_universe(ctx, n);
  for (const auto& a : generators) {
    for (const auto& x : universe) {
      ++rep.checked;
      bool ok = false;
      try {
        ok = equivariant_at(ctx, a, x);
      } catch (const std::exception& ex) {
        rep.violations.push_back(a.name() + " raised '" + ex.what() + "' on " + describe(x));
        continue;
      }
      if (!ok) rep.violations.push_back(a.name() + " fails on " + describe(x));
    }
  }
  return rep;
}

}  // namespace spbaw
