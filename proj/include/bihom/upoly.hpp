#pragma once

#include "bihom/matrix.hpp"
#include "bihom/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bihom {

/// Dense univariate polynomial over the rationals, coefficients stored from
/// the constant term upward with no trailing zeros. The zero polynomial has
/// no coefficients.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly x() { return UPoly({Rational(0), Rational(1)}); }
  /// (x - root)
  static UPoly linear(const Rational& root) { return UPoly({-root, Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  UPoly monic() const;
  Rational eval(const Rational& x) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& s, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  /// Polynomial long division; throws std::domain_error for a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly pow(unsigned k) const;

  /// Human-readable form in the variable `var`, highest degree first.
  std::string str(const std::string& var = "x") const;

private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic greatest common divisor (zero when both inputs are zero).
UPoly gcd(UPoly a, UPoly b);

/// Distinct rational roots in increasing order.
std::vector<Rational> rational_roots(const UPoly& p);

/// Invariant factors of x*I - m: the non-unit monic diagonal entries
/// d_1 | d_2 | ... | d_k of its Smith normal form over Q[x]. Their product is
/// the characteristic polynomial; two matrices are similar over Q iff the
/// lists agree.
std::vector<UPoly> invariant_factors(const Matrix& m);

}  // namespace bihom
