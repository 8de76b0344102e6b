#pragma once

#include <cstdint>
#include <vector>

namespace spbaw {

/// Element of F_q encoded as an integer in [0, q): the base-p digits are the
/// coefficients of a polynomial in t reduced modulo a fixed irreducible of
/// degree f over F_p. For f = 1 this is the usual residue mod p.
using Elem = std::uint32_t;

/// The finite field F_{p^f}. The defining polynomial is the first monic
/// irreducible of degree f over F_p in lexicographic order of its lower
/// coefficients (constant term most significant), so the encoding is stable.
class FiniteField {
 public:
  FiniteField(std::uint64_t p, std::uint64_t f);

  std::uint64_t p() const { return p_; }
  std::uint64_t f() const { return f_; }
  std::uint64_t q() const { return q_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t k) const;
  /// a^(p^i): the i-th power of the absolute Frobenius.
  Elem frobenius(Elem a, std::uint64_t i) const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// Image of the integer k under Z -> F_p -> F_q.
  Elem from_int(std::int64_t k) const;

  /// Minimal polynomial of t over F_p used to build the field (constant first).
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

 private:
  std::uint64_t p_, f_, q_;
  std::vector<std::uint64_t> modulus_;
  std::vector<Elem> log_;  // log_[a] for a != 0
  std::vector<Elem> exp_;  // exp_[k] = g^k, k in [0, q-1)

  Elem slow_mul(Elem a, Elem b) const;
};

}  // namespace spbaw
