#pragma once

#include "bihom/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bihom {

/// Dense exponent vector, one slot per variable.
using Exponents = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are keyed by exponent vector; zero coefficients are never stored.
/// Binary operations on polynomials over different variable lists first
/// extend both to the union (left operand's variables first).
class MultiPoly {
public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
  static MultiPoly variable(std::vector<std::string> variables, std::size_t index);
  static MultiPoly variable(std::vector<std::string> variables, const std::string& name);

  /// Parses expressions such as "x^2*y - 3/2*z + 1". Unknown names are
  /// rejected unless `extend` is set, in which case they are appended.
  static MultiPoly parse(std::string_view text, std::vector<std::string> variables, bool extend = false);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  std::size_t nvars() const { return vars_.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool is_zero() const { return terms_.empty(); }
  /// Nonzero polynomial with only a constant term.
  bool is_nonzero_constant() const;
  unsigned total_degree() const;
  /// Variables that occur in some term.
  std::vector<std::size_t> support() const;

  /// Adds `c` to the coefficient of the monomial, pruning zeros.
  void add_term(const Exponents& e, const Rational& c);

  /// Same polynomial expressed over `variables`, which must contain every
  /// variable in the support.
  MultiPoly over(const std::vector<std::string>& variables) const;

  Rational evaluate(const std::vector<Rational>& point) const;
  /// Replaces variable `index` by the constant `value` (the variable stays in
  /// the list with exponent 0).
  MultiPoly substitute(std::size_t index, const Rational& value) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  MultiPoly operator-() const { return Rational(-1) * *this; }

  /// Structural equality: same variable list and same terms.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  /// Deterministic text form, terms in descending lexicographic order.
  std::string str() const;

private:
  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
};

/// Union of two variable lists preserving first-seen order.
std::vector<std::string> union_variables(const std::vector<std::string>& a, const std::vector<std::string>& b);

}  // namespace bihom
