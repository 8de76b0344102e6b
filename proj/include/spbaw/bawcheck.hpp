#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spbaw/field_context.hpp"
#include "spbaw/labels.hpp"

namespace spbaw {

/// Generator of the automorphisms acting on labels: a power of the absolute
/// Frobenius, or the diagonal automorphism.
struct AutAction {
  enum class Kind { Field, Diagonal };
  Kind kind = Kind::Field;
  std::uint64_t power = 0;

  static AutAction field(std::uint64_t i) { return {Kind::Field, i}; }
  static AutAction diagonal() { return {Kind::Diagonal, 0}; }
  std::string name() const;
};

/// Brauer label -> weight label in Q-form. Throws std::logic_error if the
/// chosen ordered quotient fails to rebuild the symbol.
WeightLabelQ brauer_to_weight(const FieldContext& ctx, const IBrLabel& x);
/// Inverse of brauer_to_weight. Throws std::invalid_argument if the tuple
/// lengths or sizes do not match the block.
IBrLabel weight_to_brauer(const FieldContext& ctx, const WeightLabelQ& w);

SemisimpleLabel act_on_semisimple(const FieldContext& ctx, const AutAction& a, const SemisimpleLabel& s);
BlockLabel act_on_block(const FieldContext& ctx, const AutAction& a, const BlockLabel& b);
IBrLabel act_on_ibr(const FieldContext& ctx, const AutAction& a, const IBrLabel& x);
WeightLabelQ act_on_weight(const FieldContext& ctx, const AutAction& a, const WeightLabelQ& w);
WeightLabelK act_on_weight(const FieldContext& ctx, const AutAction& a, const WeightLabelK& w);

struct BlockReport {
  std::size_t n_ibr = 0;
  std::size_t n_weights_Q = 0;
  std::size_t n_weights_K = 0;
  /// brauer_to_weight is injective with image exactly the Q-form weights.
  bool bijective = false;
  /// weight_to_brauer inverts brauer_to_weight on both sides.
  bool inverse_ok = false;
  /// K_to_Q and Q_to_K are mutually inverse bijections between the two forms.
  bool k_forms_match = false;
  /// Generators map the block's labels to the image block's labels compatibly.
  bool equivariant = false;

  bool ok() const { return n_ibr == n_weights_Q && n_ibr == n_weights_K && bijective && inverse_ok && k_forms_match; }
};

/// Counts and bijection checks for one block. Equivariance is checked for the
/// given generators on the block's Brauer labels.
BlockReport verify_block(const FieldContext& ctx, const BlockLabel& b, const std::vector<AutAction>& generators);

struct EquivarianceReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;
};

/// For every Brauer label x of rank n and every generator a, compares
/// brauer_to_weight(a.x) with a.brauer_to_weight(x).
EquivarianceReport verify_equivariance(const FieldContext& ctx, unsigned n, const std::vector<AutAction>& generators);

/// Default generators: field(1) and diagonal.
std::vector<AutAction> default_generators();

}  // namespace spbaw
