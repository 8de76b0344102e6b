#include "spbaw/field_context.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "spbaw/finite_field.hpp"

namespace spbaw {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t checked_pow(std::uint64_t b, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (b != 0 && r > std::numeric_limits<std::uint64_t>::max() / b) {
      throw std::overflow_error("checked_pow: " + std::to_string(b) + "^" + std::to_string(k) +
                                " exceeds 64 bits");
    }
    r *= b;
  }
  return r;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t k, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1;
  b %= m;
  while (k > 0) {
    if (k & 1) r = r * b % m;
    b = b * b % m;
    k >>= 1;
  }
  return r;
}

std::uint64_t order_mod(std::int64_t a, std::uint64_t m) {
  if (!is_prime(m)) throw std::invalid_argument("order_mod: modulus " + std::to_string(m) + " is not prime");
  const auto sm = static_cast<std::int64_t>(m);
  const auto r = static_cast<std::uint64_t>(((a % sm) + sm) % sm);
  if (r == 0) throw std::invalid_argument("order_mod: " + std::to_string(a) + " is 0 mod " + std::to_string(m));
  std::uint64_t x = r;
  std::uint64_t k = 1;
  while (x != 1) {
    x = x * r % m;
    ++k;
  }
  return k;
}

std::uint64_t ell_prime_part(std::uint64_t x, std::uint64_t ell) {
  if (x == 0) return 0;
  while (x % ell == 0) x /= ell;
  return x;
}

void FieldContext::require_rank_bound(unsigned n) const {
  (void)checked_pow(q, 4 * n + 2);
}

FieldContext make_context(std::uint64_t p, std::uint64_t f, std::uint64_t ell) {
  if (p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " must be an odd prime");
  if (ell % 2 == 0 || !is_prime(ell)) {
    throw std::invalid_argument("ell = " + std::to_string(ell) + " must be an odd prime");
  }
  if (ell == p) throw std::invalid_argument("ell must differ from the defining characteristic p");
  if (f == 0) throw std::invalid_argument("f must be positive");

  FieldContext ctx;
  ctx.p = p;
  ctx.f = f;
  ctx.q = checked_pow(p, static_cast<unsigned>(f));
  ctx.ell = ell;
  const std::uint64_t q_mod = ctx.q % ell;
  ctx.e = order_mod(static_cast<std::int64_t>(q_mod * q_mod % ell), ell);
  const std::uint64_t qe = pow_mod(q_mod, ctx.e, ell);
  if (qe == 1) {
    ctx.epsilon = 1;
  } else if (qe == ell - 1) {
    ctx.epsilon = -1;
  } else {
    throw std::logic_error("make_context: q^e is neither 1 nor -1 mod ell");
  }
  ctx.field = std::make_shared<const FiniteField>(p, f);
  return ctx;
}

}  // namespace spbaw
