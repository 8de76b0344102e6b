#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "spbaw/field_context.hpp"
#include "spbaw/finite_field.hpp"

namespace spbaw {

/// Polynomial over F_q, coefficients stored constant term first with no
/// trailing zeros. Members of the elementary-divisor families are monic.
class FqPoly {
 public:
  FqPoly() = default;
  explicit FqPoly(std::vector<Elem> coeffs);

  /// X + a.
  static FqPoly linear(Elem a) { return FqPoly({a, 1}); }
  static FqPoly constant(Elem c) { return FqPoly({c}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }

  friend bool operator==(const FqPoly&, const FqPoly&) = default;
  /// Orders by degree, then lexicographically on the coefficient vector.
  friend std::strong_ordering operator<=>(const FqPoly& a, const FqPoly& b);

 private:
  std::vector<Elem> coeffs_;
};

namespace poly {
FqPoly add(const FiniteField& k, const FqPoly& a, const FqPoly& b);
FqPoly sub(const FiniteField& k, const FqPoly& a, const FqPoly& b);
FqPoly mul(const FiniteField& k, const FqPoly& a, const FqPoly& b);
FqPoly scale(const FiniteField& k, const FqPoly& a, Elem c);
/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<FqPoly, FqPoly> divmod(const FiniteField& k, const FqPoly& a, const FqPoly& b);
FqPoly mod(const FiniteField& k, const FqPoly& a, const FqPoly& b);
FqPoly monic(const FiniteField& k, const FqPoly& a);
/// Monic gcd (zero if both inputs are zero).
FqPoly gcd(const FiniteField& k, FqPoly a, FqPoly b);
FqPoly pow_mod(const FiniteField& k, FqPoly base, std::uint64_t exponent, const FqPoly& modulus);
/// Value at x.
Elem eval(const FiniteField& k, const FqPoly& a, Elem x);
}  // namespace poly

/// Human-readable form such as "X^2+2X+1"; coefficients print as their integer codes.
std::string to_string(const FqPoly& g);

bool is_irreducible(const FqPoly& g, const FieldContext& ctx);

/// Every monic irreducible of degree <= maxdeg, ordered by (degree, coefficients).
/// Throws std::overflow_error if q^maxdeg exceeds 64 bits.
std::vector<FqPoly> enumerate_irreducibles(const FieldContext& ctx, unsigned maxdeg);

/// Monic polynomial whose roots are the inverses of the roots of g.
/// Throws std::invalid_argument if g(0) = 0 or g is not monic.
FqPoly star(const FqPoly& g, const FieldContext& ctx);

/// Polynomial whose roots are the p^i-th powers of the roots of g, where g is
/// irreducible. Computed as the minimal polynomial of t^(p^i) in F_q[t]/(g).
FqPoly frobenius(const FqPoly& g, std::uint64_t i, const FieldContext& ctx);

enum class Family { F0, F1, F2 };
std::string to_string(Family f);

/// A classified elementary divisor. For F2 the stored polynomial is the
/// product Delta * Delta^*, and `factor()` is the lexicographically smaller of
/// the two irreducible factors.
class PolyClass {
 public:
  const FqPoly& gamma() const { return gamma_; }
  const FqPoly& factor() const { return factor_; }
  Family family() const { return family_; }
  int deg() const { return gamma_.degree(); }
  /// Reduced degree; throws std::logic_error for F0, whose delta is never used.
  unsigned delta() const;
  /// +1 for F2, -1 for F1; throws std::logic_error for F0.
  int sign() const;
  std::uint64_t e_gamma() const { return e_gamma_; }
  unsigned beta() const { return family_ == Family::F0 ? 2 : 1; }

  bool is_x_minus_one() const { return family_ == Family::F0 && gamma_.coeff(0) != 1; }
  bool is_x_plus_one() const { return family_ == Family::F0 && gamma_.coeff(0) == 1; }

  friend bool operator==(const PolyClass& a, const PolyClass& b) { return a.gamma_ == b.gamma_; }
  friend std::strong_ordering operator<=>(const PolyClass& a, const PolyClass& b) { return a.gamma_ <=> b.gamma_; }

 private:
  friend PolyClass make_class(const FqPoly&, const FieldContext&);
  FqPoly gamma_;
  FqPoly factor_;
  Family family_ = Family::F0;
  unsigned delta_ = 1;
  int sign_ = 1;
  std::uint64_t e_gamma_ = 0;
};

/// Class of the elementary divisor containing the monic irreducible h
/// (h != X): X-1 / X+1 give F0, self-star h gives F1, otherwise F2 with
/// gamma = h * h^*.
PolyClass make_class(const FqPoly& h, const FieldContext& ctx);

/// Classifies g as X-1, X+1, a self-star irreducible or a product Delta*Delta^*.
/// Throws std::invalid_argument if g has none of these shapes.
PolyClass classify(const FqPoly& g, const FieldContext& ctx);

/// Frobenius image of a class (factorwise for F2). X+1 and X-1 are fixed.
PolyClass frobenius(const PolyClass& c, std::uint64_t i, const FieldContext& ctx);

/// True iff every root of c has order prime to ell.
bool is_ell_prime_order(const PolyClass& c, const FieldContext& ctx);

FqPoly x_minus_one(const FieldContext& ctx);
FqPoly x_plus_one(const FieldContext& ctx);

/// All classes of degree <= maxdeg (X-1 and X+1 first, then by gamma),
/// optionally restricted to those with ell'-order roots.
std::vector<PolyClass> enumerate_classes(const FieldContext& ctx, unsigned maxdeg, bool ell_prime_only);

}  // namespace spbaw
