#include "spbaw/symbols.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace spbaw {

namespace {

using Rows = std::pair<BetaSet, BetaSet>;

void check_row(const BetaSet& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 0 || (i > 0 && r[i] >= r[i - 1])) {
      throw std::invalid_argument("LSymbol: rows must be strictly decreasing naturals");
    }
  }
}

// Lowers both rows while both contain 0; returns the number of steps.
int reduce(Rows& rows) {
  int steps = 0;
  auto& [x, y] = rows;
  while (!x.empty() && !y.empty() && x.back() == 0 && y.back() == 0) {
    x.pop_back();
    y.pop_back();
    for (auto& v : x) --v;
    for (auto& v : y) --v;
    ++steps;
  }
  return steps;
}

Rows shift(Rows rows, int t) {
  for (auto* r : {&rows.first, &rows.second}) {
    for (auto& v : *r) v += t;
    for (int k = t - 1; k >= 0; --k) r->push_back(k);
  }
  return rows;
}

bool contains(const BetaSet& b, int v) { return std::binary_search(b.rbegin(), b.rend(), v); }

// Chain c in [0, 2e): family c / e, runner c % e. Levels listed descending.
std::vector<BetaSet> split_chains(const Rows& rows, int e, SymMode mode) {
  const auto& [x, y] = rows;
  int top = 0;
  if (!x.empty()) top = std::max(top, x.front());
  if (!y.empty()) top = std::max(top, y.front());
  std::vector<BetaSet> chains(2 * e);
  for (int r = 0; r < e; ++r) {
    for (int k = top / e + 1; k >= 0; --k) {
      const int pos = r + e * k;
      const bool in_x = contains(x, pos);
      const bool in_y = contains(y, pos);
      const bool flip = mode == SymMode::Cohook && k % 2 == 1;
      if (in_x) chains[(flip ? e : 0) + r].push_back(k);
      if (in_y) chains[(flip ? 0 : e) + r].push_back(k);
    }
  }
  return chains;
}

Rows assemble(const std::vector<BetaSet>& chains, int e, SymMode mode) {
  Rows rows;
  for (int c = 0; c < 2 * e; ++c) {
    const int family = c / e;
    const int r = c % e;
    for (int k : chains[c]) {
      const bool flip = mode == SymMode::Cohook && k % 2 == 1;
      const bool to_x = (family == 0) != flip;
      (to_x ? rows.first : rows.second).push_back(r + e * k);
    }
  }
  std::sort(rows.first.rbegin(), rows.first.rend());
  std::sort(rows.second.rbegin(), rows.second.rend());
  return rows;
}

std::vector<BetaSet> pushed_down(const std::vector<BetaSet>& chains) {
  std::vector<BetaSet> out(chains.size());
  for (std::size_t c = 0; c < chains.size(); ++c) {
    for (int k = static_cast<int>(chains[c].size()); k-- > 0;) out[c].push_back(k);
  }
  return out;
}

void check_e(int e) {
  if (e < 1) throw std::invalid_argument("symbol core: e must be positive");
}

}  // namespace

LSymbol::LSymbol(BetaSet x, BetaSet y) {
  check_row(x);
  check_row(y);
  Rows rows{std::move(x), std::move(y)};
  reduce(rows);
  if (rows.second < rows.first) std::swap(rows.first, rows.second);
  first_ = std::move(rows.first);
  second_ = std::move(rows.second);
}

int LSymbol::rank() const {
  const int sx = std::accumulate(first_.begin(), first_.end(), 0);
  const int sy = std::accumulate(second_.begin(), second_.end(), 0);
  const int n = static_cast<int>(first_.size() + second_.size()) - 1;
  return sx + sy - n * n / 4;
}

int LSymbol::defect() const {
  return std::abs(static_cast<int>(first_.size()) - static_cast<int>(second_.size()));
}

std::pair<BetaSet, BetaSet> shifted_rows(const LSymbol& s, int t) {
  if (t < 0) throw std::invalid_argument("shifted_rows: negative shift");
  return shift({s.first(), s.second()}, t);
}

SymQuotient::SymQuotient(EQuotient a, EQuotient b) {
  if (a.size() != b.size()) throw std::invalid_argument("SymQuotient: tuples of different lengths");
  if (b < a) std::swap(a, b);
  first = std::move(a);
  second = std::move(b);
}

OrderedQuotient ordered(const SymQuotient& q, int orient) {
  OrderedQuotient out;
  const auto& a = orient % 2 == 0 ? q.first : q.second;
  const auto& b = orient % 2 == 0 ? q.second : q.first;
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

OrderedQuotient swap_halves(const OrderedQuotient& oq) {
  if (oq.size() % 2 != 0) throw std::invalid_argument("swap_halves: odd length");
  const auto half = static_cast<std::ptrdiff_t>(oq.size() / 2);
  OrderedQuotient out(oq.begin() + half, oq.end());
  out.insert(out.end(), oq.begin(), oq.begin() + half);
  return out;
}

SymQuotient unordered(const OrderedQuotient& oq) {
  if (oq.size() % 2 != 0) throw std::invalid_argument("unordered: odd length");
  const auto half = static_cast<std::ptrdiff_t>(oq.size() / 2);
  return SymQuotient(EQuotient(oq.begin(), oq.begin() + half), EQuotient(oq.begin() + half, oq.end()));
}

SymDecomposition decompose(const LSymbol& s, int e, SymMode mode) {
  check_e(e);
  const Rows base{s.first(), s.second()};
  Rows probe = assemble(pushed_down(split_chains(base, e, mode)), e, mode);
  const int t0 = reduce(probe);
  const int t = (2 * e - t0 % (2 * e)) % (2 * e);
  const Rows rep = shift(base, t);

  const auto chains = split_chains(rep, e, mode);
  SymDecomposition out;
  OrderedQuotient fam;
  for (const auto& c : chains) {
    fam.push_back(partition_of(c));
    out.weight += size(fam.back());
  }
  Rows core = assemble(pushed_down(chains), e, mode);
  const int steps = reduce(core);
  if (steps % (2 * e) != 0) throw std::logic_error("decompose: core representative is not anchored");
  out.core = LSymbol(core.first, core.second);
  if (out.core.is_degenerate()) {
    out.quotient_seq = ordered(unordered(fam), 0);
  } else {
    const bool x_is_first = core.first == out.core.first();
    out.quotient_seq = x_is_first ? fam : swap_halves(fam);
  }
  return out;
}

std::pair<LSymbol, SymQuotient> sym_core_quotient(const LSymbol& s, int e, SymMode mode) {
  auto d = decompose(s, e, mode);
  return {d.core, d.quotient()};
}

bool is_sym_core(const LSymbol& s, int e, SymMode mode) { return decompose(s, e, mode).weight == 0; }

LSymbol star_plain(const LSymbol& core, const OrderedQuotient& oq, SymMode mode) {
  if (oq.empty() || oq.size() % 2 != 0) throw std::invalid_argument("star_plain: quotient must have 2e entries");
  const int e = static_cast<int>(oq.size() / 2);
  if (!is_sym_core(core, e, mode)) throw std::invalid_argument("star_plain: first argument is not a core");
  std::size_t longest = 0;
  for (const auto& p : oq) {
    if (!is_partition(p)) throw std::invalid_argument("star_plain: quotient entry is not a partition");
    longest = std::max(longest, p.size());
  }
  const Rows rep = shift({core.first(), core.second()}, 2 * e * (static_cast<int>(longest) + 1));
  auto chains = split_chains(rep, e, mode);
  for (int c = 0; c < 2 * e; ++c) chains[c] = beta_set(oq[c], static_cast<int>(chains[c].size()));
  const Rows rows = assemble(chains, e, mode);
  LSymbol out(rows.first, rows.second);

  const auto check = decompose(out, e, mode);
  const bool ok = check.core == core &&
                  (core.is_degenerate() ? check.quotient() == unordered(oq) : check.quotient_seq == oq);
  if (!ok) throw std::logic_error("star_plain: reconstruction does not decompose back to its inputs");
  return out;
}

LSymbol star_oriented(const LSymbol& core, int orient, const OrderedQuotient& oq, SymMode mode) {
  if (core.is_degenerate()) throw std::invalid_argument("star_oriented: core must be non-degenerate");
  return star_plain(core, orient % 2 == 0 ? oq : swap_halves(oq), mode);
}

std::vector<LSymbol> from_core_quotient_sym(const LSymbol& core, const SymQuotient& q, SymMode mode) {
  std::vector<LSymbol> out{star_plain(core, ordered(q, 0), mode)};
  LSymbol other = star_plain(core, ordered(q, 1), mode);
  if (other != out.front()) out.push_back(std::move(other));
  std::sort(out.begin(), out.end());
  return out;
}

StripResult strip_hooks(const LSymbol& s, int e, SymMode mode, std::uint64_t seed) {
  check_e(e);
  Rows rows{s.first(), s.second()};
  std::mt19937_64 rng(seed);
  StripResult out;
  for (;;) {
    // (row, value) pairs that may move.
    std::vector<std::pair<int, int>> moves;
    for (int row = 0; row < 2; ++row) {
      const BetaSet& from = row == 0 ? rows.first : rows.second;
      const BetaSet& to = (row == 0) == (mode == SymMode::Hook) ? rows.first : rows.second;
      for (int x : from) {
        if (x - e >= 0 && !contains(to, x - e)) moves.emplace_back(row, x);
      }
    }
    if (moves.empty()) break;
    const auto pick = seed == 0 ? 0 : std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng);
    const auto [row, x] = moves[pick];
    const int before = static_cast<int>(rows.first.size()) - static_cast<int>(rows.second.size());
    BetaSet& from = row == 0 ? rows.first : rows.second;
    BetaSet& to = (row == 0) == (mode == SymMode::Hook) ? rows.first : rows.second;
    from.erase(std::find(from.begin(), from.end(), x));
    to.insert(std::upper_bound(to.begin(), to.end(), x - e, std::greater<>()), x - e);
    const int after = static_cast<int>(rows.first.size()) - static_cast<int>(rows.second.size());
    const int change = std::abs(after - before);
    if ((mode == SymMode::Hook && change != 0) || (mode == SymMode::Cohook && change != 2)) {
      throw std::logic_error("strip_hooks: move changed the defect by " + std::to_string(after - before));
    }
    ++out.moves;
  }
  out.core = LSymbol(rows.first, rows.second);
  return out;
}

std::vector<LSymbol> enumerate_symbols(int rank, const std::function<bool(int)>& defect_pred) {
  std::vector<LSymbol> out;
  if (rank < 0) return out;
  std::set<LSymbol> seen;
  for (int d = 0; d * d / 4 <= rank; ++d) {
    if (!defect_pred(d)) continue;
    for (const auto& bp : enumerate_tuples(2, rank - d * d / 4)) {
      const int k = std::max(static_cast<int>(bp[0].size()) - d, static_cast<int>(bp[1].size()));
      LSymbol s(beta_set(bp[0], k + d), beta_set(bp[1], k));
      if (seen.insert(s).second) out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace spbaw
