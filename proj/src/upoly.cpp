#include "bihom/upoly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace bihom {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  const Rational inv = leading().inverse();
  UPoly r(*this);
  for (auto& x : r.c_) x *= inv;
  return r;
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + Rational(-1) * b; }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly operator*(const Rational& s, const UPoly& a) {
  std::vector<Rational> c(a.c_);
  for (auto& x : c) x *= s;
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < d.degree()) return {UPoly{}, *this};
  std::vector<Rational> q(static_cast<std::size_t>(degree() - d.degree() + 1), Rational(0));
  std::vector<Rational> r(c_);
  const Rational inv = d.leading().inverse();
  for (int k = degree() - d.degree(); k >= 0; --k) {
    const Rational f = r[static_cast<std::size_t>(k + d.degree())] * inv;
    q[static_cast<std::size_t>(k)] = f;
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j) r[static_cast<std::size_t>(k) + j] -= f * d.c_[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly UPoly::pow(unsigned k) const {
  UPoly r = constant(1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational a = c.abs();
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (k == 0) {
      s += a.str();
      continue;
    }
    if (!a.is_one()) s += a.str() + "*";
    s += var;
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

mpz_class pollard_rho(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto f = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      mpz_class diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
  if (n <= 1) return;
  for (unsigned long p = 2; p < 10000; ++p) {
    if (mpz_class(p) * p > n) break;
    while (n % p == 0) {
      ++out[mpz_class(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::map<mpz_class, unsigned> f;
  factor_into(abs(n), f);
  std::vector<mpz_class> ds{1};
  for (const auto& [p, e] : f) {
    const std::size_t base = ds.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
  if (p.degree() <= 0) return {};
  // Integer coefficients, primitive.
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> a;
  for (const auto& c : p.coeffs()) a.push_back(c.numerator() * (l / c.denominator()));
  std::set<Rational> roots;
  std::size_t low = 0;
  while (a[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  if (low + 1 == a.size()) return {roots.begin(), roots.end()};
  const auto num_cands = divisors(a[low]);
  const auto den_cands = divisors(a.back());
  for (const auto& q : den_cands)
    for (const auto& n : num_cands)
      for (int s : {1, -1}) {
        const Rational r(mpq_class(n * s, q));
        if (!roots.count(r) && p.eval(r).is_zero()) roots.insert(r);
      }
  return {roots.begin(), roots.end()};
}

namespace {

using PolyMatrix = std::vector<std::vector<UPoly>>;

}  // namespace

std::vector<UPoly> invariant_factors(const Matrix& m) {
  if (!m.square()) throw ShapeError("invariant factors of a non-square matrix");
  const std::size_t n = m.rows();
  PolyMatrix a(n, std::vector<UPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = UPoly::constant(-m(i, j));
      if (i == j) a[i][j] = a[i][j] + UPoly::x();
    }

  auto row_op = [&](std::size_t dst, std::size_t src, const UPoly& f) {
    for (std::size_t j = 0; j < n; ++j) a[dst][j] = a[dst][j] - f * a[src][j];
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const UPoly& f) {
    for (std::size_t i = 0; i < n; ++i) a[i][dst] = a[i][dst] - f * a[i][src];
  };

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Pivot: nonzero entry of least degree in the trailing block.
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (!a[i][j].is_zero() && (pi == n || a[i][j].degree() < a[pi][pj].degree())) {
            pi = i;
            pj = j;
          }
      if (pi == n) break;
      std::swap(a[t], a[pi]);
      for (std::size_t i = 0; i < n; ++i) std::swap(a[i][t], a[i][pj]);

      bool reduced = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t].is_zero()) continue;
        auto [q, r] = a[i][t].divmod(a[t][t]);
        row_op(i, t, q);
        if (!r.is_zero()) reduced = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j].is_zero()) continue;
        auto [q, r] = a[t][j].divmod(a[t][t]);
        col_op(j, t, q);
        if (!r.is_zero()) reduced = false;
      }
      if (!reduced) continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!a[i][j].divmod(a[t][t]).second.is_zero()) {
            for (std::size_t c = 0; c < n; ++c) a[t][c] = a[t][c] + a[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
  }

  std::vector<UPoly> out;
  for (std::size_t i = 0; i < n; ++i) {
    UPoly d = a[i][i].monic();
    if (d.degree() >= 1) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace bihom
