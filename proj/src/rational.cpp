#include "bihom/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace bihom {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  q_ = mpq_class(num, 1);
  q_ /= den;
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  mpz_class d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(mpq_class(parse_integer(num), d));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::uint64_t Rational::mod(std::uint64_t p) const {
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class den = q_.get_den() % pz;
  if (den == 0) throw std::domain_error("denominator divisible by p");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  mpz_class r = (q_.get_num() * inv) % pz;
  if (r < 0) r += pz;
  return r.get_ui();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace bihom
