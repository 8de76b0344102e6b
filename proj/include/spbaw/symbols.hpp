#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "spbaw/partitions.hpp"

namespace spbaw {

/// Unordered pair of beta-sets modulo the simultaneous shift
/// [X, Y] -> [X^{+1}, Y^{+1}] (add 0 to both rows, raise every other entry).
/// Stored reduced: while both rows contain 0 it is removed and the rows are
/// lowered. The lexicographically smaller row (as a descending vector) is first.
class LSymbol {
 public:
  LSymbol() = default;
  /// Throws std::invalid_argument unless both rows are strictly decreasing naturals.
  LSymbol(BetaSet x, BetaSet y);

  const BetaSet& first() const { return first_; }
  const BetaSet& second() const { return second_; }

  int rank() const;
  int defect() const;
  bool is_degenerate() const { return first_ == second_; }
  bool empty() const { return first_.empty() && second_.empty(); }

  friend bool operator==(const LSymbol&, const LSymbol&) = default;
  friend auto operator<=>(const LSymbol&, const LSymbol&) = default;

 private:
  BetaSet first_;
  BetaSet second_;
};

/// Rows of `s` shifted up by t.
std::pair<BetaSet, BetaSet> shifted_rows(const LSymbol& s, int t);

/// Hook mode moves a bead e places down in its own row; cohook mode moves it
/// e places down into the other row.
enum class SymMode { Hook, Cohook };

/// Unordered pair of e-tuples, stored with the lexicographically smaller first.
struct SymQuotient {
  EQuotient first;
  EQuotient second;

  SymQuotient() = default;
  SymQuotient(EQuotient a, EQuotient b);
  bool is_degenerate() const { return first == second; }
  int size() const { return tuple_size(first) + tuple_size(second); }
  friend bool operator==(const SymQuotient&, const SymQuotient&) = default;
  friend auto operator<=>(const SymQuotient&, const SymQuotient&) = default;
};

/// An ordered quotient is a flat sequence of 2e partitions: the first e
/// entries attach to the first row of the core, the last e to the second.
using OrderedQuotient = std::vector<Partition>;

/// (Q, 0) lists Q.first then Q.second; (Q, 1) lists them the other way round.
OrderedQuotient ordered(const SymQuotient& q, int orient);
/// Exchanges the first e and last e entries.
OrderedQuotient swap_halves(const OrderedQuotient& oq);
SymQuotient unordered(const OrderedQuotient& oq);

struct SymDecomposition {
  LSymbol core;
  /// Quotient anchored to the first row of `core`. When the core is
  /// degenerate there is no anchor and this is ordered(quotient(), 0).
  OrderedQuotient quotient_seq;
  int weight = 0;

  SymQuotient quotient() const { return unordered(quotient_seq); }
};

/// Core and quotient via the 2e bead chains of the symbol. In hook mode the
/// chains are the runners of each row; in cohook mode the chain through
/// position r + e*k alternates rows with the parity of k. The representative
/// is chosen so that the core's representative is its reduced form shifted by
/// a multiple of 2e, which makes the quotient independent of the input shift.
SymDecomposition decompose(const LSymbol& s, int e, SymMode mode);

std::pair<LSymbol, SymQuotient> sym_core_quotient(const LSymbol& s, int e, SymMode mode);
bool is_sym_core(const LSymbol& s, int e, SymMode mode);

/// The symbol with core `core` whose anchored ordered quotient is `oq`
/// (e = oq.size() / 2). Throws std::invalid_argument if `core` is not a core
/// or `oq` has odd length, std::logic_error if the result fails to decompose back.
LSymbol star_plain(const LSymbol& core, const OrderedQuotient& oq, SymMode mode);

/// Depends on orient + oq's orientation only; orient 1 reverses oq's halves.
/// Throws std::invalid_argument if `core` is degenerate.
LSymbol star_oriented(const LSymbol& core, int orient, const OrderedQuotient& oq, SymMode mode);

/// Every symbol with the given core and quotient (one or two of them).
std::vector<LSymbol> from_core_quotient_sym(const LSymbol& core, const SymQuotient& q, SymMode mode);

struct StripResult {
  LSymbol core;
  int moves = 0;
};

/// Removes e-hooks (or e-cohooks) one move at a time, picking among the
/// available moves with a generator seeded by `seed` (seed 0 takes the first).
/// Throws std::logic_error if a move breaks the defect bookkeeping: hook moves
/// keep |X| - |Y|, cohook moves change it by exactly 2 in absolute value.
StripResult strip_hooks(const LSymbol& s, int e, SymMode mode, std::uint64_t seed = 0);

/// Every reduced symbol of the given rank whose defect satisfies `defect_pred`,
/// ordered by defect and then by bipartition.
std::vector<LSymbol> enumerate_symbols(int rank, const std::function<bool(int)>& defect_pred);

}  // namespace spbaw
