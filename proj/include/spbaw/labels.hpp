#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "spbaw/ffpoly.hpp"
#include "spbaw/field_context.hpp"
#include "spbaw/partitions.hpp"
#include "spbaw/symbols.hpp"

namespace spbaw {

/// Conjugacy-class label of a semisimple element of SO_{2n+1}(q): the
/// multiplicity of each elementary divisor plus the signs attached to X+1 and X-1.
struct SemisimpleLabel {
  /// Support sorted by class; multiplicities are positive.
  std::vector<std::pair<PolyClass, int>> mult;
  /// +1 or -1 when X+1 is in the support, 0 otherwise.
  int eta_plus = 0;
  int eta_minus = 1;

  int m(const PolyClass& c) const;
  /// Index of X-1 / X+1 in `mult`, if present.
  std::optional<std::size_t> index_minus() const;
  std::optional<std::size_t> index_plus() const;
  /// Sum of multiplicity times degree, which is 2n+1.
  int dimension() const;

  friend bool operator==(const SemisimpleLabel&, const SemisimpleLabel&) = default;
  friend auto operator<=>(const SemisimpleLabel&, const SemisimpleLabel&) = default;
};

/// Partition for classes of degree > 1, symbol for X-1 and X+1.
using Shape = std::variant<Partition, LSymbol>;

/// Labels below store one Shape (or tuple) per support entry of `s`, in the same order.
struct BlockLabel {
  SemisimpleLabel s;
  std::vector<Shape> kappa;
  int i = 0;
  friend bool operator==(const BlockLabel&, const BlockLabel&) = default;
  friend auto operator<=>(const BlockLabel&, const BlockLabel&) = default;
};

struct IBrLabel {
  SemisimpleLabel s;
  std::vector<Shape> lambda;
  int j = 0;
  friend bool operator==(const IBrLabel&, const IBrLabel&) = default;
  friend auto operator<=>(const IBrLabel&, const IBrLabel&) = default;
};

/// Q[k] is a tuple of beta*e_Gamma partitions for the k-th support entry.
struct WeightLabelQ {
  BlockLabel block;
  std::vector<std::vector<Partition>> Q;
  friend bool operator==(const WeightLabelQ&, const WeightLabelQ&) = default;
  friend auto operator<=>(const WeightLabelQ&, const WeightLabelQ&) = default;
};

/// K[k][b] is the core tower on branch b of the k-th support entry.
struct WeightLabelK {
  BlockLabel block;
  std::vector<std::vector<CoreTower>> K;
  friend bool operator==(const WeightLabelK&, const WeightLabelK&) = default;
  friend auto operator<=>(const WeightLabelK&, const WeightLabelK&) = default;
};

/// Hook mode for linear primes, cohook mode for unitary ones.
SymMode symbol_mode(const FieldContext& ctx);

/// Sign attached to X-1 is this constant times eta_plus times the product of
/// sign(Gamma)^m(Gamma) over the other classes.
inline constexpr int kEtaMinusConstant = 1;

/// Every semisimple label for rank n, optionally restricted to classes whose
/// roots have ell'-order; ordered by the recursion over classes.
std::vector<SemisimpleLabel> enumerate_semisimple(const FieldContext& ctx, unsigned n, bool ell_prime_only);

/// kappa / lambda for X+1, or the empty symbol when X+1 is not in the support.
LSymbol plus_symbol(const SemisimpleLabel& s, const std::vector<Shape>& shapes);

/// w_Gamma for the k-th support entry; throws std::invalid_argument if the
/// defining equation has no nonnegative integer solution.
int weight_of(const FieldContext& ctx, const BlockLabel& b, std::size_t k);
std::vector<int> weights_of(const FieldContext& ctx, const BlockLabel& b);
/// Number of partitions in the k-th Q tuple (beta * e_Gamma).
int tuple_length(const FieldContext& ctx, const PolyClass& c);

/// Blocks (s, kappa, i) over all ell'-semisimple s in canonical order.
std::vector<BlockLabel> enumerate_blocks(const FieldContext& ctx, unsigned n);
/// Blocks for a single semisimple label.
std::vector<BlockLabel> blocks_for(const FieldContext& ctx, const SemisimpleLabel& s);

std::vector<IBrLabel> enumerate_ibr(const FieldContext& ctx, const BlockLabel& b);
/// All (s, lambda, j) for ell'-semisimple s, built without reference to blocks.
std::vector<IBrLabel> enumerate_ibr_universe(const FieldContext& ctx, unsigned n);
BlockLabel block_of(const FieldContext& ctx, const IBrLabel& x);

std::vector<WeightLabelQ> enumerate_weights_Q(const FieldContext& ctx, const BlockLabel& b);
std::vector<WeightLabelK> enumerate_weights_K(const FieldContext& ctx, const BlockLabel& b);
WeightLabelQ K_to_Q(const FieldContext& ctx, const WeightLabelK& wk);
WeightLabelK Q_to_K(const FieldContext& ctx, const WeightLabelQ& wq);

struct ShapeEntry {
  PolyClass gamma;
  int delta = 0;
  int branch = 0;
  int t = 0;
  friend bool operator==(const ShapeEntry&, const ShapeEntry&) = default;
  friend auto operator<=>(const ShapeEntry&, const ShapeEntry&) = default;
};

/// Nonzero totals of core sizes per (class, level, branch).
std::vector<ShapeEntry> radical_shape(const FieldContext& ctx, const WeightLabelK& wk);

}  // namespace spbaw
