#pragma once

#include <cstdint>
#include <memory>

namespace spbaw {

class FiniteField;

/// Deterministic trial-division primality test.
bool is_prime(std::uint64_t n);

/// b^k, throwing std::overflow_error if the result does not fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t b, unsigned k);

/// b^k mod m without overflow for m < 2^32.
std::uint64_t pow_mod(std::uint64_t b, std::uint64_t k, std::uint64_t m);

/// Multiplicative order of a modulo the prime m. Negative a is reduced first.
std::uint64_t order_mod(std::int64_t a, std::uint64_t m);

/// Largest divisor of x coprime to the prime ell.
std::uint64_t ell_prime_part(std::uint64_t x, std::uint64_t ell);

/// Arithmetic frame shared by every enumeration: q = p^f, the odd prime ell,
/// e = ord_ell(q^2) and the linear (+1) / unitary (-1) flag epsilon.
struct FieldContext {
  std::uint64_t p = 0;
  std::uint64_t f = 0;
  std::uint64_t q = 0;
  std::uint64_t ell = 0;
  std::uint64_t e = 0;
  int epsilon = 0;
  std::shared_ptr<const FiniteField> field;

  const FiniteField& fq() const { return *field; }

  /// Throws std::overflow_error unless q^(4n+2) fits in 64 bits, which bounds
  /// every power of q the rank-n enumerations take.
  void require_rank_bound(unsigned n) const;

  friend bool operator==(const FieldContext& a, const FieldContext& b) {
    return a.p == b.p && a.f == b.f && a.ell == b.ell;
  }
};

/// Validates (p, f, ell) and derives q, e and epsilon.
/// Throws std::invalid_argument for even or composite p / ell, ell == p, f == 0.
FieldContext make_context(std::uint64_t p, std::uint64_t f, std::uint64_t ell);

}  // namespace spbaw
