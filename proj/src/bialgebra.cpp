#include "bihom/bialgebra.hpp"

namespace bihom {

void BiHomBialgebra::validate() const {
  alg.validate();
  coa.validate();
  if (alg.dim != coa.dim) throw ShapeError("algebra and coalgebra dimensions differ");
}

namespace {

Vec outer(const Vec& a, const Vec& b) {
  Vec t;
  t.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) t.push_back(x * y);
  return t;
}

IdentityCheck check_multiplicative(const BiHomAlgebra& a, const Matrix& f) {
  const std::size_t n = a.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = f.apply(eval_mul(a, basis_vec(n, i), basis_vec(n, j)));
      Vec rhs = eval_mul(a, f.column(i), f.column(j));
      if (lhs != rhs) return IdentityCheck::fail({i, j}, std::move(lhs), std::move(rhs));
    }
  return IdentityCheck::pass();
}

IdentityCheck check_comultiplicative_map(const BiHomCoalgebra& c, const Matrix& f) {
  const std::size_t n = c.dim;
  for (std::size_t i = 0; i < n; ++i) {
    Vec lhs = apply_tensor2(f, f, eval_comul(c, basis_vec(n, i)));
    Vec rhs = eval_comul(c, f.column(i));
    if (lhs != rhs) return IdentityCheck::fail({i}, std::move(lhs), std::move(rhs));
  }
  return IdentityCheck::pass();
}

// sum_{a,b,c,d} D_i^{ab} D_j^{cd} mu(e_a, e_c) (x) mu(e_b, e_d)
Vec product_of_coproducts(const BiHomBialgebra& b, std::size_t i, std::size_t j) {
  const std::size_t n = b.dim();
  Vec out = zero_vec(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Rational& x = b.coa.comul(i, p, q);
      if (x.is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          const Rational& y = b.coa.comul(j, r, s);
          if (y.is_zero()) continue;
          const Vec t = outer(eval_mul(b.alg, basis_vec(n, p), basis_vec(n, r)),
                              eval_mul(b.alg, basis_vec(n, q), basis_vec(n, s)));
          for (std::size_t k = 0; k < t.size(); ++k)
            if (!t[k].is_zero()) out[k] += x * y * t[k];
        }
    }
  return out;
}

}  // namespace

bool CompatibilityReport::compatibility_passes() const {
  return comul_multiplicative.holds && alpha_psi_commute.holds && alpha_omega_commute.holds &&
         beta_psi_commute.holds && beta_omega_commute.holds && alpha_comultiplicative.holds &&
         beta_comultiplicative.holds && psi_multiplicative.holds && omega_multiplicative.holds &&
         unit_counit != UnitStatus::fail;
}

bool CompatibilityReport::passes() const {
  return algebra.passes() && coalgebra.passes() && counit.status != UnitStatus::fail && compatibility_passes();
}

std::optional<std::string> CompatibilityReport::first_failure() const {
  const std::pair<const char*, const IdentityCheck*> checks[] = {
      {"bihom_associative", &algebra.bihom_associative},
      {"alpha_multiplicative", &algebra.alpha_multiplicative},
      {"beta_multiplicative", &algebra.beta_multiplicative},
      {"alpha_beta_commute", &algebra.twists_commute},
  };
  for (const auto& [name, c] : checks)
    if (!c->holds) return name;
  if (algebra.unit_laws == UnitStatus::fail) return "unit: " + algebra.unit_law;
  const std::pair<const char*, const IdentityCheck*> co[] = {
      {"psi_omega_commute", &coalgebra.twists_commute},
      {"psi_comultiplicative", &coalgebra.psi_comultiplicative},
      {"omega_comultiplicative", &coalgebra.omega_comultiplicative},
      {"coassociative", &coalgebra.coassociative},
  };
  for (const auto& [name, c] : co)
    if (!c->holds) return name;
  if (counit.status == UnitStatus::fail) return "counit: " + counit.law;
  const std::pair<const char*, const IdentityCheck*> compat[] = {
      {"comul_multiplicative", &comul_multiplicative},
      {"alpha_psi_commute", &alpha_psi_commute},
      {"alpha_omega_commute", &alpha_omega_commute},
      {"beta_psi_commute", &beta_psi_commute},
      {"beta_omega_commute", &beta_omega_commute},
      {"alpha_comultiplicative", &alpha_comultiplicative},
      {"beta_comultiplicative", &beta_comultiplicative},
      {"psi_multiplicative", &psi_multiplicative},
      {"omega_multiplicative", &omega_multiplicative},
  };
  for (const auto& [name, c] : compat)
    if (!c->holds) return name;
  if (unit_counit == UnitStatus::fail) return "unit/counit: " + unit_counit_law;
  return std::nullopt;
}

CompatibilityReport check_compatibility(const BiHomBialgebra& b) {
  b.validate();
  const std::size_t n = b.dim();
  const BiHomAlgebra& a = b.alg;
  const BiHomCoalgebra& c = b.coa;
  CompatibilityReport r;
  r.algebra = check_axioms(a);
  r.coalgebra = check_coalgebra_axioms(c);
  r.counit = check_counit(c);

  for (std::size_t i = 0; i < n && r.comul_multiplicative.holds; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = eval_comul(c, eval_mul(a, basis_vec(n, i), basis_vec(n, j)));
      Vec rhs = product_of_coproducts(b, i, j);
      if (lhs != rhs) {
        r.comul_multiplicative = IdentityCheck::fail({i, j}, std::move(lhs), std::move(rhs));
        break;
      }
    }
  r.alpha_psi_commute = matrices_equal(a.alpha * c.psi, c.psi * a.alpha);
  r.alpha_omega_commute = matrices_equal(a.alpha * c.omega, c.omega * a.alpha);
  r.beta_psi_commute = matrices_equal(a.beta * c.psi, c.psi * a.beta);
  r.beta_omega_commute = matrices_equal(a.beta * c.omega, c.omega * a.beta);
  r.alpha_comultiplicative = check_comultiplicative_map(c, a.alpha);
  r.beta_comultiplicative = check_comultiplicative_map(c, a.beta);
  r.psi_multiplicative = check_multiplicative(a, c.psi);
  r.omega_multiplicative = check_multiplicative(a, c.omega);

  if (!b.has_unit_and_counit()) return r;
  const Vec& u = *a.unit;
  const Vec& eps = *c.counit;
  auto dot = [](const Vec& x, const Vec& y) {
    Rational s;
    for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
    return s;
  };
  auto fail = [&](const char* law, IdentityCheck w) {
    r.unit_counit = UnitStatus::fail;
    r.unit_counit_law = law;
    r.unit_counit_witness = std::move(w);
  };
  r.unit_counit = UnitStatus::pass;
  if (Vec du = eval_comul(c, u), uu = outer(u, u); du != uu) {
    fail("Delta(u)=u(x)u", IdentityCheck::fail({}, du, uu));
  } else if (Rational e = dot(eps, u); !e.is_one()) {
    fail("eps(u)=1", IdentityCheck::fail({}, {e}, {Rational(1)}));
  } else if (Vec pu = c.psi.apply(u); pu != u) {
    fail("psi(u)=u", IdentityCheck::fail({}, pu, u));
  } else if (Vec ou = c.omega.apply(u); ou != u) {
    fail("omega(u)=u", IdentityCheck::fail({}, ou, u));
  } else {
    const Vec ea = a.alpha.transpose().apply(eps);
    const Vec eb = a.beta.transpose().apply(eps);
    for (std::size_t i = 0; i < n && r.unit_counit == UnitStatus::pass; ++i)
      if (ea[i] != eps[i]) fail("eps alpha=eps", IdentityCheck::fail({i}, {ea[i]}, {eps[i]}));
    for (std::size_t i = 0; i < n && r.unit_counit == UnitStatus::pass; ++i)
      if (eb[i] != eps[i]) fail("eps beta=eps", IdentityCheck::fail({i}, {eb[i]}, {eps[i]}));
    for (std::size_t i = 0; i < n && r.unit_counit == UnitStatus::pass; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Rational lhs = dot(eps, eval_mul(a, basis_vec(n, i), basis_vec(n, j)));
        const Rational rhs = eps[i] * eps[j];
        if (lhs != rhs) {
          fail("eps(xy)=eps(x)eps(y)", IdentityCheck::fail({i, j}, {lhs}, {rhs}));
          break;
        }
      }
  }
  return r;
}

AntipodeSystem antipode_system(const BiHomBialgebra& b) {
  b.validate();
  if (!b.has_unit_and_counit()) throw PreconditionError("antipode system needs unit and counit");
  const std::size_t n = b.dim();
  const std::size_t nn = n * n;
  const BiHomAlgebra& a = b.alg;
  const BiHomCoalgebra& c = b.coa;
  const Vec& u = *a.unit;
  const Vec& eps = *c.counit;
  auto var = [n](std::size_t row, std::size_t col) { return row * n + col; };

  AntipodeSystem sys{Matrix(2 * nn + 4 * nn, nn), zero_vec(2 * nn + 4 * nn)};
  const Matrix left = c.psi * c.omega;
  const Matrix right = a.alpha * a.beta;
  const Matrix left2 = a.beta * c.psi;
  const Matrix right2 = a.alpha * c.omega;

  // sum_{j,k} D_i^{jk} mu(psi omega S(e_j), alpha beta(e_k)) = eps_i u; S(e_j) = sum_p S(p, j) e_p
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& d = c.comul(i, j, k);
        if (d.is_zero()) continue;
        for (std::size_t p = 0; p < n; ++p) {
          const Vec z = eval_mul(a, left.column(p), right.column(k));
          for (std::size_t r = 0; r < n; ++r) sys.m(i * n + r, var(p, j)) += d * z[r];
          const Vec w = eval_mul(a, left2.column(j), right2.column(p));
          for (std::size_t r = 0; r < n; ++r) sys.m(nn + i * n + r, var(p, k)) += d * w[r];
        }
      }
    for (std::size_t r = 0; r < n; ++r) {
      sys.rhs[i * n + r] = eps[i] * u[r];
      sys.rhs[nn + i * n + r] = eps[i] * u[r];
    }
  }
  // (S T - T S)(r, q) = sum_m S(r, m) T(m, q) - T(r, m) S(m, q)
  const Matrix* twists[] = {&a.alpha, &a.beta, &c.psi, &c.omega};
  std::size_t base = 2 * nn;
  for (const Matrix* t : twists) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t m = 0; m < n; ++m) {
          sys.m(base + r * n + q, var(r, m)) += (*t)(m, q);
          sys.m(base + r * n + q, var(m, q)) -= (*t)(r, m);
        }
    base += nn;
  }
  return sys;
}

AntipodeResult solve_antipode(const BiHomBialgebra& b) {
  AntipodeResult res;
  if (!b.has_unit_and_counit()) {
    res.reason = "unit and counit required";
    return res;
  }
  const CompatibilityReport rep = check_compatibility(b);
  if (!rep.passes()) {
    res.reason = "not a bialgebra: " + rep.first_failure().value_or("?");
    return res;
  }
  const AntipodeSystem sys = antipode_system(b);
  const auto sol = solve(sys.m, sys.rhs);
  if (!sol) {
    res.status = AntipodeResult::Status::none;
    res.reason = "antipode system is inconsistent";
    return res;
  }
  res.status = AntipodeResult::Status::found;
  res.antipode = Matrix(b.dim(), b.dim(), sol->particular);
  res.solution_space_dim = sol->free_count;
  return res;
}

AntipodeCheck check_antipode(const BiHomBialgebra& b, const Matrix& s) {
  b.validate();
  if (!b.has_unit_and_counit()) throw PreconditionError("check_antipode needs unit and counit");
  const std::size_t n = b.dim();
  if (s.rows() != n || s.cols() != n) throw ShapeError("antipode has wrong shape");
  const BiHomAlgebra& a = b.alg;
  const BiHomCoalgebra& c = b.coa;
  const Vec& u = *a.unit;
  const Vec& eps = *c.counit;
  AntipodeCheck out;

  const Matrix left = c.psi * c.omega * s;
  const Matrix right = a.alpha * a.beta;
  const Matrix left2 = a.beta * c.psi;
  const Matrix right2 = a.alpha * c.omega * s;
  for (int which = 0; which < 2; ++which)
    for (std::size_t i = 0; i < n; ++i) {
      Vec lhs = zero_vec(n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Rational& d = c.comul(i, j, k);
          if (d.is_zero()) continue;
          const Vec z = which == 0 ? eval_mul(a, left.column(j), right.column(k))
                                   : eval_mul(a, left2.column(j), right2.column(k));
          lhs = add(lhs, scale(d, z));
        }
      Vec rhs = scale(eps[i], u);
      if (lhs != rhs) {
        out.holds = false;
        out.identity = which == 0 ? "psi omega S(h1) alpha beta(h2)=eps(h)u" : "beta psi(h1) alpha omega S(h2)=eps(h)u";
        out.witness = IdentityCheck::fail({i}, std::move(lhs), std::move(rhs));
        return out;
      }
    }
  const std::pair<const char*, const Matrix*> twists[] = {
      {"S alpha=alpha S", &a.alpha}, {"S beta=beta S", &a.beta}, {"S psi=psi S", &c.psi}, {"S omega=omega S", &c.omega}};
  for (const auto& [name, t] : twists) {
    IdentityCheck w = matrices_equal(s * *t, *t * s);
    if (!w.holds) {
      out.holds = false;
      out.identity = name;
      out.witness = std::move(w);
      return out;
    }
  }
  return out;
}

}  // namespace bihom
