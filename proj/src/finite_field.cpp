#include "spbaw/finite_field.hpp"

#include <stdexcept>
#include <string>

#include "spbaw/field_context.hpp"

namespace spbaw {

namespace {

using Digits = std::vector<std::uint64_t>;

constexpr std::uint64_t kMaxTableSize = std::uint64_t{1} << 22;

Digits to_digits(Elem a, std::uint64_t p, std::uint64_t f) {
  Digits d(f, 0);
  for (std::uint64_t i = 0; i < f; ++i) {
    d[i] = a % p;
    a = static_cast<Elem>(a / p);
  }
  return d;
}

Elem from_digits(const Digits& d, std::uint64_t p) {
  std::uint64_t a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return static_cast<Elem>(a);
}

// Remainder of a modulo the monic polynomial m over F_p (constant term first).
Digits poly_rem_p(Digits a, const Digits& m, std::uint64_t p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    const std::uint64_t c = a[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[i - dm + j] = (a[i - dm + j] + (p - c) * m[j]) % p;
    }
  }
  a.resize(std::min(a.size(), dm));
  return a;
}

bool is_irreducible_p(const Digits& m, std::uint64_t p) {
  const std::size_t deg = m.size() - 1;
  if (deg <= 1) return deg == 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = checked_pow(p, static_cast<unsigned>(d));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Digits cand(d + 1, 0);
      std::uint64_t x = idx;
      for (std::size_t j = 0; j < d; ++j) {
        cand[j] = x % p;
        x /= p;
      }
      cand[d] = 1;
      Digits r = poly_rem_p(m, cand, p);
      bool zero = true;
      for (auto c : r) zero = zero && (c == 0);
      if (zero) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FiniteField::FiniteField(std::uint64_t p, std::uint64_t f) : p_(p), f_(f), q_(checked_pow(p, static_cast<unsigned>(f))) {
  if (q_ > kMaxTableSize) {
    throw std::invalid_argument("field of order " + std::to_string(q_) + " exceeds the supported table size");
  }
  // First monic irreducible of degree f, constant term most significant.
  const std::uint64_t count = checked_pow(p, static_cast<unsigned>(f));
  for (std::uint64_t idx = 0; idx < count && modulus_.empty(); ++idx) {
    Digits cand(f + 1, 0);
    std::uint64_t x = idx;
    for (std::size_t j = 0; j < f; ++j) {
      cand[f - 1 - j] = x % p;
      x /= p;
    }
    cand[f] = 1;
    if (is_irreducible_p(cand, p)) modulus_ = cand;
  }
  if (modulus_.empty()) throw std::logic_error("no irreducible polynomial of degree f found");

  // Primitive element, then log/exp tables.
  const auto factors = prime_factors(q_ - 1);
  auto slow_pow = [&](Elem a, std::uint64_t k) {
    Elem r = 1;
    while (k > 0) {
      if (k & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      k >>= 1;
    }
    return r;
  };
  Elem g = 0;
  for (Elem cand = 1; cand < q_; ++cand) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow_pow(cand, (q_ - 1) / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  if (g == 0) throw std::logic_error("no primitive element found");
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint64_t k = 0; k + 1 < q_; ++k) {
    exp_[k] = x;
    log_[x] = static_cast<Elem>(k);
    x = slow_mul(x, g);
  }
}

Elem FiniteField::slow_mul(Elem a, Elem b) const {
  const Digits da = to_digits(a, p_, f_);
  const Digits db = to_digits(b, p_, f_);
  Digits prod(2 * f_, 0);
  for (std::size_t i = 0; i < f_; ++i) {
    for (std::size_t j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  Digits r = poly_rem_p(prod, modulus_, p_);
  r.resize(f_, 0);
  return from_digits(r, p_);
}

Elem FiniteField::add(Elem a, Elem b) const {
  if (f_ == 1) return static_cast<Elem>((a + static_cast<std::uint64_t>(b)) % p_);
  std::uint64_t r = 0, scale = 1;
  for (std::uint64_t i = 0; i < f_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a = static_cast<Elem>(a / p_);
    b = static_cast<Elem>(b / p_);
    scale *= p_;
  }
  return static_cast<Elem>(r);
}

Elem FiniteField::neg(Elem a) const {
  if (f_ == 1) return static_cast<Elem>((p_ - a) % p_);
  std::uint64_t r = 0, scale = 1;
  for (std::uint64_t i = 0; i < f_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a = static_cast<Elem>(a / p_);
    scale *= p_;
  }
  return static_cast<Elem>(r);
}

Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("FiniteField::inv: zero has no inverse");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem FiniteField::pow(Elem a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::uint64_t>(log_[a]) * (k % (q_ - 1)) % (q_ - 1)];
}

Elem FiniteField::frobenius(Elem a, std::uint64_t i) const {
  i %= f_;
  Elem r = a;
  for (std::uint64_t k = 0; k < i; ++k) r = pow(r, p_);
  return r;
}

Elem FiniteField::from_int(std::int64_t k) const {
  const auto sp = static_cast<std::int64_t>(p_);
  return static_cast<Elem>(((k % sp) + sp) % sp);
}

}  // namespace spbaw
