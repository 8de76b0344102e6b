#pragma once

#include <json.hpp>

#include "spbaw/bawcheck.hpp"
#include "spbaw/ffpoly.hpp"
#include "spbaw/field_context.hpp"
#include "spbaw/labels.hpp"

namespace spbaw {

using json = nlohmann::json;

// Polynomials are coefficient arrays (constant term first), partitions are
// part lists, symbols are their two rows, core towers are lists of levels.

json json_of(const FieldContext& ctx);
json json_of(const FqPoly& g);
/// {coeffs, family, delta, sign, eGamma, betaGamma}; delta and sign are null for F0.
json json_of(const PolyClass& c);
json json_of(const Partition& p);
json json_of(const LSymbol& s);
json json_of(const Shape& s);
json json_of(const CoreTower& t);
json json_of(const SemisimpleLabel& s);
json json_of(const BlockLabel& b);
json json_of(const IBrLabel& x);
json json_of(const WeightLabelQ& w);
json json_of(const WeightLabelK& w);
json json_of(const BlockReport& r);

}  // namespace spbaw
