#include "bihom/iso.hpp"

#include "bihom/polysys.hpp"
#include "bihom/upoly.hpp"

#include <algorithm>
#include <cmath>

namespace bihom {

std::string status_name(IsoVerdict::Status s) {
  switch (s) {
    case IsoVerdict::Status::isomorphic: return "isomorphic";
    case IsoVerdict::Status::not_isomorphic: return "not-isomorphic";
    case IsoVerdict::Status::unknown: return "unknown";
  }
  return "unknown";
}

std::string structure_key(const BiHomAlgebra& a) {
  std::string s = std::to_string(a.dim) + "|";
  for (const auto& x : a.mul.entries()) s += x.str() + ",";
  s += "|";
  for (const auto& x : a.alpha.entries()) s += x.str() + ",";
  s += "|";
  for (const auto& x : a.beta.entries()) s += x.str() + ",";
  return s;
}

namespace {

bool valid_witness(const BiHomAlgebra& a, const BiHomAlgebra& b, const Matrix& phi) {
  return !det(phi).is_zero() && is_morphism(a, b, phi).holds;
}

std::optional<Matrix> grid_search(const BiHomAlgebra& a, const BiHomAlgebra& b, std::size_t cap) {
  const std::size_t n = a.dim;
  const std::size_t nn = n * n;
  Matrix k(2 * nn, nn);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t m = 0; m < n; ++m) {
        k(r * n + q, m * n + q) += b.alpha(r, m);
        k(r * n + q, r * n + m) -= a.alpha(m, q);
        k(nn + r * n + q, m * n + q) += b.beta(r, m);
        k(nn + r * n + q, r * n + m) -= a.beta(m, q);
      }
  const std::vector<Vec> basis = nullspace(k);
  const std::size_t dim = basis.size();
  if (dim == 0) return std::nullopt;

  const std::vector<Rational> wide = {0, 1, -1, 2, -2, Rational(1, 2), Rational(-1, 2)};
  const std::vector<Rational> narrow = {0, 1, -1};
  const double wide_count = std::pow(static_cast<double>(wide.size()), static_cast<double>(dim));
  const std::vector<Rational>& values = wide_count <= static_cast<double>(cap) ? wide : narrow;

  std::vector<std::size_t> digit(dim, 0);
  for (std::size_t tried = 0; tried < cap; ++tried) {
    Vec v = zero_vec(nn);
    for (std::size_t l = 0; l < dim; ++l)
      if (!values[digit[l]].is_zero()) v = add(v, scale(values[digit[l]], basis[l]));
    const Matrix phi(n, n, v);
    if (valid_witness(a, b, phi)) return phi;
    std::size_t pos = dim;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < values.size()) break;
      digit[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
  }
  return std::nullopt;
}

UPoly as_univariate(const MultiPoly& p, std::size_t v) {
  std::vector<Rational> c;
  for (const auto& [e, coef] : p.terms()) {
    if (c.size() <= e[v]) c.resize(e[v] + 1, Rational(0));
    c[e[v]] += coef;
  }
  return UPoly(std::move(c));
}

class PointSearch {
public:
  PointSearch(const BiHomAlgebra& a, const BiHomAlgebra& b, const IsoOptions& opt) : a_(a), b_(b), opt_(opt) {}

  std::optional<Matrix> run(const Ideal& system) {
    std::vector<std::optional<Rational>> assigned(system.variables.size());
    return step(system.variables, system.generators, assigned);
  }

  bool budget_hit() const { return budget_hit_; }

private:
  std::optional<Matrix> finish(const std::vector<std::optional<Rational>>& assigned) {
    const std::size_t n = a_.dim;
    Vec v(n * n);
    for (std::size_t i = 0; i < n * n; ++i) v[i] = assigned[i].value_or(Rational(0));
    Matrix phi(n, n, v);
    if (valid_witness(a_, b_, phi)) return phi;
    return std::nullopt;
  }

  std::optional<Matrix> step(const std::vector<std::string>& vars, const std::vector<MultiPoly>& gens,
                             std::vector<std::optional<Rational>> assigned) {
    if (calls_ >= opt_.point_search_cap) {
      budget_hit_ = true;
      return std::nullopt;
    }
    ++calls_;
    Ideal ideal(vars);
    for (const auto& g : gens) ideal.add(g);
    const GroebnerResult gb = buchberger(ideal, opt_.groebner);
    if (!gb.complete()) {
      budget_hit_ = true;
      return std::nullopt;
    }
    if (ideal_is_trivial(gb.basis)) return std::nullopt;
    const auto& basis = gb.basis.basis;
    if (basis.empty()) return finish(assigned);

    auto branch = [&](std::size_t v, const Rational& value) -> std::optional<Matrix> {
      std::vector<MultiPoly> next;
      for (const auto& g : basis) {
        MultiPoly s = g.substitute(v, value);
        if (!s.is_zero()) next.push_back(std::move(s));
      }
      auto with = assigned;
      with[v] = value;
      return step(vars, next, with);
    };

    for (const auto& g : basis) {
      const auto sup = g.support();
      if (sup.size() != 1) continue;
      for (const auto& root : rational_roots(as_univariate(g, sup[0])))
        if (auto r = branch(sup[0], root)) return r;
      return std::nullopt;
    }
    std::vector<bool> used(vars.size(), false);
    for (const auto& g : basis)
      for (auto v : g.support()) used[v] = true;
    std::size_t pick = vars.size();
    for (std::size_t v = 0; v + 1 < vars.size() && pick == vars.size(); ++v)
      if (used[v] && !assigned[v]) pick = v;
    if (pick == vars.size()) pick = vars.size() - 1;
    static const std::vector<Rational> candidates = {0, 1, -1, 2, -2, 3, -3, Rational(1, 2), Rational(-1, 2), Rational(1, 3)};
    for (const auto& c : candidates)
      if (auto r = branch(pick, c)) return r;
    return std::nullopt;
  }

  const BiHomAlgebra& a_;
  const BiHomAlgebra& b_;
  const IsoOptions& opt_;
  std::size_t calls_ = 0;
  bool budget_hit_ = false;
};

IsoVerdict decide_ordered(const BiHomAlgebra& a, const BiHomAlgebra& b, const IsoOptions& options) {
  IsoVerdict v;
  if (auto cert = fingerprints_distinguish(a, b)) {
    v.status = IsoVerdict::Status::not_isomorphic;
    v.method = "invariant-mismatch";
    v.invariant = std::move(cert);
    return v;
  }
  if (auto phi = grid_search(a, b, options.grid_cap)) {
    v.status = IsoVerdict::Status::isomorphic;
    v.method = "grid-search";
    v.witness = std::move(phi);
    return v;
  }
  const Ideal system = gen_iso_system(a, b);
  const GroebnerResult gb = buchberger(system, options.groebner);
  if (!gb.complete()) {
    v.method = "budget-exceeded";
    v.reason = "Groebner basis exceeded " + std::to_string(options.groebner.max_steps) + " reduction steps";
    return v;
  }
  if (ideal_is_trivial(gb.basis)) {
    v.status = IsoVerdict::Status::not_isomorphic;
    v.method = "trivial-ideal";
    for (const auto& p : gb.basis.basis)
      if (p.is_nonzero_constant()) v.constant = p.terms().begin()->second;
    return v;
  }
  PointSearch search(a, b, options);
  if (auto phi = search.run(system)) {
    v.status = IsoVerdict::Status::isomorphic;
    v.method = "point-search";
    v.witness = std::move(phi);
    return v;
  }
  v.method = search.budget_hit() ? "budget-exceeded" : "no-rational-witness";
  v.reason = search.budget_hit() ? "rational point search exhausted its budget"
                                 : "isomorphism system is consistent but no rational point was found";
  return v;
}

}  // namespace

IsoVerdict decide_isomorphic(const BiHomAlgebra& a, const BiHomAlgebra& b, const IsoOptions& options) {
  a.validate();
  b.validate();
  if (a.dim != b.dim) throw ShapeError("decide_isomorphic: dimensions differ");
  const std::string ka = structure_key(a), kb = structure_key(b);
  if (ka == kb) {
    IsoVerdict v;
    v.status = IsoVerdict::Status::isomorphic;
    v.method = "identity";
    v.witness = Matrix::identity(a.dim);
    return v;
  }
  if (ka < kb) return decide_ordered(a, b, options);
  IsoVerdict v = decide_ordered(b, a, options);
  if (v.witness) v.witness = inverse(*v.witness);
  if (v.invariant) std::swap(v.invariant->value_a, v.invariant->value_b);
  return v;
}

}  // namespace bihom
