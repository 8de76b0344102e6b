#include "spbaw/ffpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spbaw {

FqPoly::FqPoly(std::vector<Elem> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::strong_ordering operator<=>(const FqPoly& a, const FqPoly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.coeffs_ <=> b.coeffs_;
}

namespace poly {

FqPoly add(const FiniteField& k, const FqPoly& a, const FqPoly& b) {
  std::vector<Elem> r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = k.add(a.coeff(i), b.coeff(i));
  return FqPoly(std::move(r));
}

FqPoly sub(const FiniteField& k, const FqPoly& a, const FqPoly& b) {
  std::vector<Elem> r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = k.sub(a.coeff(i), b.coeff(i));
  return FqPoly(std::move(r));
}

FqPoly mul(const FiniteField& k, const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<Elem> r(ca.size() + cb.size() - 1, 0);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(ca[i], cb[j]));
  }
  return FqPoly(std::move(r));
}

FqPoly scale(const FiniteField& k, const FqPoly& a, Elem c) {
  std::vector<Elem> r = a.coeffs();
  for (auto& x : r) x = k.mul(x, c);
  return FqPoly(std::move(r));
}

std::pair<FqPoly, FqPoly> divmod(const FiniteField& k, const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) throw std::domain_error("poly::divmod: division by zero polynomial");
  if (a.degree() < b.degree()) return {FqPoly{}, a};
  std::vector<Elem> rem = a.coeffs();
  const auto& cb = b.coeffs();
  const std::size_t db = cb.size() - 1;
  const Elem lead_inv = k.inv(cb.back());
  std::vector<Elem> quo(rem.size() - db, 0);
  for (std::size_t i = rem.size(); i-- > db;) {
    const Elem c = k.mul(rem[i], lead_inv);
    quo[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = k.sub(rem[i - db + j], k.mul(c, cb[j]));
  }
  rem.resize(db);
  return {FqPoly(std::move(quo)), FqPoly(std::move(rem))};
}

FqPoly mod(const FiniteField& k, const FqPoly& a, const FqPoly& b) { return divmod(k, a, b).second; }

FqPoly monic(const FiniteField& k, const FqPoly& a) {
  if (a.is_zero()) return a;
  return scale(k, a, k.inv(a.coeffs().back()));
}

FqPoly gcd(const FiniteField& k, FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = mod(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(k, a);
}

FqPoly pow_mod(const FiniteField& k, FqPoly base, std::uint64_t exponent, const FqPoly& modulus) {
  FqPoly r = mod(k, FqPoly::constant(1), modulus);
  base = mod(k, base, modulus);
  while (exponent > 0) {
    if (exponent & 1) r = mod(k, mul(k, r, base), modulus);
    exponent >>= 1;
    if (exponent > 0) base = mod(k, mul(k, base, base), modulus);
  }
  return r;
}

Elem eval(const FiniteField& k, const FqPoly& a, Elem x) {
  Elem r = 0;
  const auto& c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) r = k.add(k.mul(r, x), c[i]);
  return r;
}

}  // namespace poly

std::string to_string(const FqPoly& g) {
  if (g.is_zero()) return "0";
  std::string out;
  const auto& c = g.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (c[i] != 1 || i == 0) out += std::to_string(c[i]);
    if (i >= 1) out += "X";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
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

// X^(q^j) mod g for j = 0..d, by repeated q-th powering.
std::vector<FqPoly> frobenius_powers_of_x(const FiniteField& k, const FqPoly& g, unsigned d) {
  std::vector<FqPoly> out;
  out.reserve(d + 1);
  out.push_back(poly::mod(k, FqPoly::linear(0), g));
  for (unsigned j = 1; j <= d; ++j) out.push_back(poly::pow_mod(k, out.back(), k.q(), g));
  return out;
}

// Solves A c = v over F_q, where A has the given columns (each of length rows).
// Returns false if the system is inconsistent.
bool solve_columns(const FiniteField& k, const std::vector<std::vector<Elem>>& cols, const std::vector<Elem>& v,
                   std::vector<Elem>& sol) {
  const std::size_t rows = v.size();
  const std::size_t ncols = cols.size();
  std::vector<std::vector<Elem>> m(rows, std::vector<Elem>(ncols + 1, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < ncols; ++c) m[r][c] = cols[c][r];
    m[r][ncols] = v[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < rows; ++c) {
    std::size_t piv = row;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    const Elem inv = k.inv(m[row][c]);
    for (auto& x : m[row]) x = k.mul(x, inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Elem factor = m[r][c];
      for (std::size_t cc = 0; cc <= ncols; ++cc) m[r][cc] = k.sub(m[r][cc], k.mul(factor, m[row][cc]));
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r) {
    if (m[r][ncols] != 0) return false;
  }
  sol.assign(ncols, 0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) sol[pivot_col[r]] = m[r][ncols];
  return true;
}

std::vector<Elem> padded(const FqPoly& a, std::size_t n) {
  std::vector<Elem> v(n, 0);
  for (std::size_t i = 0; i < n; ++i) v[i] = a.coeff(i);
  return v;
}

// Monic h of even degree d with star(h) = h: h(0) = +-1 and c_{d-i} = h(0) c_i.
std::vector<FqPoly> self_star_candidates(const FieldContext& ctx, unsigned d) {
  const auto& k = ctx.fq();
  const unsigned half = d / 2;
  std::vector<FqPoly> out;
  for (const Elem c0 : {Elem{1}, k.neg(1)}) {
    const unsigned free = c0 == 1 ? half : half - 1;
    const std::uint64_t count = checked_pow(ctx.q, free);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<Elem> c(d + 1, 0);
      c[0] = c0;
      c[d] = 1;
      std::uint64_t x = idx;
      for (unsigned i = 1; i <= free; ++i) {
        c[i] = static_cast<Elem>(x % ctx.q);
        x /= ctx.q;
        c[d - i] = k.mul(c0, c[i]);
      }
      FqPoly h(std::move(c));
      if (star(h, ctx) == h) out.push_back(std::move(h));
    }
  }
  return out;
}

}  // namespace

bool is_irreducible(const FqPoly& g, const FieldContext& ctx) {
  const auto& k = ctx.fq();
  if (g.degree() < 1) return false;
  const auto d = static_cast<unsigned>(g.degree());
  if (d == 1) return true;
  const FqPoly m = poly::monic(k, g);
  const auto xp = frobenius_powers_of_x(k, m, d);
  const FqPoly x = poly::mod(k, FqPoly::linear(0), m);
  if (xp[d] != x) return false;
  for (auto r : prime_divisors(d)) {
    const FqPoly h = poly::sub(k, xp[d / r], x);
    if (poly::gcd(k, m, h).degree() != 0) return false;
  }
  return true;
}

std::vector<FqPoly> enumerate_irreducibles(const FieldContext& ctx, unsigned maxdeg) {
  if (maxdeg == 0) throw std::invalid_argument("enumerate_irreducibles: maxdeg must be positive");
  const std::uint64_t q = ctx.q;
  (void)checked_pow(q, maxdeg);
  std::vector<FqPoly> out;
  for (unsigned d = 1; d <= maxdeg; ++d) {
    const std::uint64_t count = checked_pow(q, d);
    std::vector<FqPoly> level;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      // Lexicographic order on the coefficient vector, constant term most significant.
      std::vector<Elem> c(d + 1, 0);
      std::uint64_t x = idx;
      for (unsigned j = 0; j < d; ++j) {
        c[d - 1 - j] = static_cast<Elem>(x % q);
        x /= q;
      }
      c[d] = 1;
      FqPoly g(std::move(c));
      if (is_irreducible(g, ctx)) level.push_back(std::move(g));
    }
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

FqPoly star(const FqPoly& g, const FieldContext& ctx) {
  const auto& k = ctx.fq();
  if (!g.is_monic()) throw std::invalid_argument("star: polynomial must be monic");
  if (g.coeff(0) == 0) throw std::invalid_argument("star: polynomial must have nonzero constant term");
  std::vector<Elem> rev(g.coeffs().rbegin(), g.coeffs().rend());
  return poly::scale(k, FqPoly(std::move(rev)), k.inv(g.coeff(0)));
}

FqPoly frobenius(const FqPoly& g, std::uint64_t i, const FieldContext& ctx) {
  const auto& k = ctx.fq();
  if (!g.is_monic() || g.degree() < 1) throw std::invalid_argument("frobenius: polynomial must be monic of positive degree");
  const auto d = static_cast<std::size_t>(g.degree());
  // t lies in F_{q^d} = F_{p^(f d)}, so only i mod f*d matters.
  i %= ctx.f * d;
  if (i == 0) return g;
  FqPoly beta = poly::mod(k, FqPoly::linear(0), g);
  for (std::uint64_t s = 0; s < i; ++s) beta = poly::pow_mod(k, beta, ctx.p, g);

  std::vector<std::vector<Elem>> cols;
  FqPoly power = FqPoly::constant(1);
  cols.push_back(padded(power, d));
  for (std::size_t deg = 1; deg <= d; ++deg) {
    power = poly::mod(k, poly::mul(k, power, beta), g);
    const auto v = padded(power, d);
    std::vector<Elem> sol;
    if (solve_columns(k, cols, v, sol)) {
      std::vector<Elem> c(deg + 1, 0);
      for (std::size_t j = 0; j < deg; ++j) c[j] = k.neg(sol[j]);
      c[deg] = 1;
      return FqPoly(std::move(c));
    }
    cols.push_back(v);
  }
  throw std::logic_error("frobenius: no linear dependency found among powers");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::F0: return "F0";
    case Family::F1: return "F1";
    case Family::F2: return "F2";
  }
  return "?";
}

unsigned PolyClass::delta() const {
  if (family_ == Family::F0) throw std::logic_error("PolyClass::delta read for an F0 class");
  return delta_;
}

int PolyClass::sign() const {
  if (family_ == Family::F0) throw std::logic_error("PolyClass::sign read for an F0 class");
  return sign_;
}

FqPoly x_minus_one(const FieldContext& ctx) { return FqPoly::linear(ctx.fq().neg(1)); }
FqPoly x_plus_one(const FieldContext&) { return FqPoly::linear(1); }

PolyClass make_class(const FqPoly& h, const FieldContext& ctx) {
  const auto& k = ctx.fq();
  if (!h.is_monic() || h.degree() < 1 || h.coeff(0) == 0) {
    throw std::invalid_argument("make_class: expected a monic irreducible other than X");
  }
  PolyClass c;
  if (h == x_minus_one(ctx) || h == x_plus_one(ctx)) {
    c.gamma_ = h;
    c.factor_ = h;
    c.family_ = Family::F0;
    c.delta_ = 1;
    c.sign_ = 1;
    c.e_gamma_ = ctx.e;
    return c;
  }
  const FqPoly hs = star(h, ctx);
  const std::uint64_t qmod = ctx.q % ctx.ell;
  if (hs == h) {
    if (h.degree() % 2 != 0) throw std::logic_error("make_class: self-star irreducible of odd degree");
    c.gamma_ = h;
    c.factor_ = h;
    c.family_ = Family::F1;
    c.delta_ = static_cast<unsigned>(h.degree() / 2);
    c.sign_ = -1;
    const std::uint64_t v = pow_mod(qmod, c.delta_, ctx.ell);
    c.e_gamma_ = order_mod(-static_cast<std::int64_t>(v), ctx.ell);
  } else {
    c.factor_ = std::min(h, hs);
    c.gamma_ = poly::mul(k, h, hs);
    c.family_ = Family::F2;
    c.delta_ = static_cast<unsigned>(h.degree());
    c.sign_ = 1;
    c.e_gamma_ = order_mod(static_cast<std::int64_t>(pow_mod(qmod, c.delta_, ctx.ell)), ctx.ell);
  }
  return c;
}

PolyClass classify(const FqPoly& g, const FieldContext& ctx) {
  const auto& k = ctx.fq();
  if (!g.is_monic() || g.degree() < 1 || g.coeff(0) == 0) {
    throw std::invalid_argument("classify: " + to_string(g) + " is not monic with nonzero constant term");
  }
  if (g.degree() == 1) {
    if (g == x_minus_one(ctx) || g == x_plus_one(ctx)) return make_class(g, ctx);
    throw std::invalid_argument("classify: " + to_string(g) + " is linear but not X-1 or X+1");
  }
  if (is_irreducible(g, ctx)) {
    if (star(g, ctx) == g) return make_class(g, ctx);
    throw std::invalid_argument("classify: irreducible " + to_string(g) + " is not self-star");
  }
  if (g.degree() % 2 == 0) {
    // Search for an irreducible factor of half degree with g = Delta * Delta^*.
    const auto half = static_cast<unsigned>(g.degree() / 2);
    const std::uint64_t count = checked_pow(ctx.q, half);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<Elem> c(half + 1, 0);
      std::uint64_t x = idx;
      for (unsigned j = 0; j < half; ++j) {
        c[j] = static_cast<Elem>(x % ctx.q);
        x /= ctx.q;
      }
      c[half] = 1;
      FqPoly delta(std::move(c));
      if (delta.coeff(0) == 0) continue;
      if (!poly::mod(k, g, delta).is_zero()) continue;
      if (!is_irreducible(delta, ctx)) continue;
      const FqPoly ds = star(delta, ctx);
      if (ds == delta || delta == x_minus_one(ctx) || delta == x_plus_one(ctx)) continue;
      if (poly::mul(k, delta, ds) == g) return make_class(delta, ctx);
    }
  }
  throw std::invalid_argument("classify: " + to_string(g) + " is not of the form X+-1, self-star irreducible, or D*D^*");
}

PolyClass frobenius(const PolyClass& c, std::uint64_t i, const FieldContext& ctx) {
  if (c.family() == Family::F0) return c;
  return make_class(frobenius(c.factor(), i, ctx), ctx);
}

bool is_ell_prime_order(const PolyClass& c, const FieldContext& ctx) {
  const auto& k = ctx.fq();
  std::vector<FqPoly> factors{c.factor()};
  if (c.family() == Family::F2) factors.push_back(star(c.factor(), ctx));
  for (const auto& h : factors) {
    const auto d = static_cast<unsigned>(h.degree());
    const std::uint64_t m = ell_prime_part(checked_pow(ctx.q, d) - 1, ctx.ell);
    if (poly::pow_mod(k, FqPoly::linear(0), m, h) != FqPoly::constant(1)) return false;
  }
  return true;
}

std::vector<PolyClass> enumerate_classes(const FieldContext& ctx, unsigned maxdeg, bool ell_prime_only) {
  std::vector<PolyClass> out;
  out.push_back(make_class(x_minus_one(ctx), ctx));
  out.push_back(make_class(x_plus_one(ctx), ctx));
  if (maxdeg < 2) return out;
  std::vector<PolyClass> rest;
  // Star pairs need deg h <= maxdeg / 2; above that only self-star h qualify.
  const unsigned low = std::max(1u, maxdeg / 2);
  for (const auto& h : enumerate_irreducibles(ctx, low)) {
    if (h.coeff(0) == 0 || h == x_minus_one(ctx) || h == x_plus_one(ctx)) continue;
    const FqPoly hs = star(h, ctx);
    if (hs == h || (h < hs && 2 * static_cast<unsigned>(h.degree()) <= maxdeg)) rest.push_back(make_class(h, ctx));
  }
  for (unsigned d = low + 1; d <= maxdeg; ++d) {
    if (d % 2 != 0) continue;  // a self-star irreducible of odd degree is X-1 or X+1
    for (const auto& h : self_star_candidates(ctx, d)) {
      if (is_irreducible(h, ctx)) rest.push_back(make_class(h, ctx));
    }
  }
  std::sort(rest.begin(), rest.end());
  for (auto& c : rest) {
    if (!ell_prime_only || is_ell_prime_order(c, ctx)) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace spbaw
