#include "bihom/algebra.hpp"

namespace bihom {

bool Tensor3::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

IdentityCheck matrices_equal(const Matrix& a, const Matrix& b) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c) != b(r, c)) return IdentityCheck::fail({r, c}, {a(r, c)}, {b(r, c)});
  return IdentityCheck::pass();
}

BiHomAlgebra BiHomAlgebra::zero(std::size_t n) {
  BiHomAlgebra a;
  a.dim = n;
  a.mul = Tensor3(n);
  a.alpha = Matrix::identity(n);
  a.beta = Matrix::identity(n);
  return a;
}

void BiHomAlgebra::validate() const {
  if (mul.dim() != dim) throw ShapeError("multiplication tensor does not match dimension");
  if (alpha.rows() != dim || alpha.cols() != dim) throw ShapeError("alpha does not match dimension");
  if (beta.rows() != dim || beta.cols() != dim) throw ShapeError("beta does not match dimension");
  if (unit && unit->size() != dim) throw ShapeError("unit does not match dimension");
}

Vec eval_mul(const Tensor3& mul, const Vec& x, const Vec& y) {
  const std::size_t n = mul.dim();
  if (x.size() != n || y.size() != n) throw ShapeError("eval_mul: vector length differs from dimension");
  Vec z = zero_vec(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!mul(i, j, k).is_zero()) z[k] += xy * mul(i, j, k);
    }
  }
  return z;
}

Vec eval_mul(const BiHomAlgebra& a, const Vec& x, const Vec& y) { return eval_mul(a.mul, x, y); }

namespace {

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

}  // namespace

AxiomReport check_axioms(const BiHomAlgebra& a) {
  a.validate();
  const std::size_t n = a.dim;
  AxiomReport r;

  for (std::size_t i = 0; i < n && r.bihom_associative.holds; ++i)
    for (std::size_t j = 0; j < n && r.bihom_associative.holds; ++j) {
      const Vec eij = eval_mul(a, basis_vec(n, i), basis_vec(n, j));
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = eval_mul(a, a.alpha.column(i), eval_mul(a, basis_vec(n, j), basis_vec(n, k)));
        Vec rhs = eval_mul(a, eij, a.beta.column(k));
        if (lhs != rhs) {
          r.bihom_associative = IdentityCheck::fail({i, j, k}, std::move(lhs), std::move(rhs));
          break;
        }
      }
    }

  r.alpha_multiplicative = check_multiplicative(a, a.alpha);
  r.beta_multiplicative = check_multiplicative(a, a.beta);
  r.twists_commute = matrices_equal(a.alpha * a.beta, a.beta * a.alpha);

  if (a.unit) {
    const Vec& u = *a.unit;
    r.unit_laws = UnitStatus::pass;
    auto fail = [&](const char* law, IdentityCheck w) {
      r.unit_laws = UnitStatus::fail;
      r.unit_law = law;
      r.unit_witness = std::move(w);
    };
    for (std::size_t i = 0; i < n && r.unit_laws == UnitStatus::pass; ++i) {
      Vec lhs = eval_mul(a, basis_vec(n, i), u);
      if (lhs != a.alpha.column(i)) fail("x*u=alpha(x)", IdentityCheck::fail({i}, lhs, a.alpha.column(i)));
    }
    for (std::size_t i = 0; i < n && r.unit_laws == UnitStatus::pass; ++i) {
      Vec lhs = eval_mul(a, u, basis_vec(n, i));
      if (lhs != a.beta.column(i)) fail("u*x=beta(x)", IdentityCheck::fail({i}, lhs, a.beta.column(i)));
    }
    if (r.unit_laws == UnitStatus::pass && a.alpha.apply(u) != u)
      fail("alpha(u)=u", IdentityCheck::fail({}, a.alpha.apply(u), u));
    if (r.unit_laws == UnitStatus::pass && a.beta.apply(u) != u)
      fail("beta(u)=u", IdentityCheck::fail({}, a.beta.apply(u), u));
  }
  return r;
}

BiHomAlgebra transport(const BiHomAlgebra& a, const Matrix& phi) {
  a.validate();
  if (phi.rows() != a.dim || phi.cols() != a.dim) throw ShapeError("transport: phi has wrong shape");
  const auto inv = inverse(phi);
  if (!inv) throw PreconditionError("transport: phi is not invertible");
  const std::size_t n = a.dim;
  BiHomAlgebra out;
  out.dim = n;
  out.mul = Tensor3(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec z = phi.apply(eval_mul(a, inv->column(i), inv->column(j)));
      for (std::size_t k = 0; k < n; ++k) out.mul(i, j, k) = z[k];
    }
  out.alpha = phi * a.alpha * *inv;
  out.beta = phi * a.beta * *inv;
  if (a.unit) out.unit = phi.apply(*a.unit);
  out.label = a.label;
  return out;
}

MorphismCheck is_morphism(const BiHomAlgebra& a, const BiHomAlgebra& b, const Matrix& phi, bool require_unital) {
  a.validate();
  b.validate();
  if (phi.rows() != b.dim || phi.cols() != a.dim) throw ShapeError("is_morphism: phi has wrong shape");
  MorphismCheck m;
  for (std::size_t i = 0; i < a.dim && m.holds; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec lhs = phi.apply(eval_mul(a, basis_vec(a.dim, i), basis_vec(a.dim, j)));
      Vec rhs = eval_mul(b, phi.column(i), phi.column(j));
      if (lhs != rhs) {
        m = {false, "phi(xy)=phi(x)phi(y)", IdentityCheck::fail({i, j}, std::move(lhs), std::move(rhs))};
        break;
      }
    }
  if (m.holds) {
    auto w = matrices_equal(b.alpha * phi, phi * a.alpha);
    if (!w.holds) m = {false, "alpha_B phi=phi alpha_A", std::move(w)};
  }
  if (m.holds) {
    auto w = matrices_equal(b.beta * phi, phi * a.beta);
    if (!w.holds) m = {false, "beta_B phi=phi beta_A", std::move(w)};
  }
  if (m.holds && require_unital) {
    if (!a.unit || !b.unit) {
      m = {false, "phi(u_A)=u_B", IdentityCheck::fail({}, {}, {})};
    } else {
      Vec img = phi.apply(*a.unit);
      if (img != *b.unit) m = {false, "phi(u_A)=u_B", IdentityCheck::fail({}, std::move(img), *b.unit)};
    }
  }
  return m;
}

BiHomAlgebra yau_twist(const BiHomAlgebra& a, const Matrix& gamma) {
  const auto m = is_morphism(a, a, gamma);
  if (!m.holds) {
    std::string at;
    for (auto x : m.witness.at) at += (at.empty() ? "" : ",") + std::to_string(x + 1);
    throw PreconditionError("yau_twist: gamma violates " + m.identity + " at (" + at + ")");
  }
  BiHomAlgebra out = a;
  const std::size_t n = a.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec z = gamma.apply(eval_mul(a, basis_vec(n, i), basis_vec(n, j)));
      for (std::size_t k = 0; k < n; ++k) out.mul(i, j, k) = z[k];
    }
  out.alpha = gamma * a.alpha;
  out.beta = gamma * a.beta;
  if (a.unit && gamma.apply(*a.unit) != *a.unit) out.unit.reset();
  return out;
}

BiHomAlgebra direct_sum(const BiHomAlgebra& a, const BiHomAlgebra& b) {
  a.validate();
  b.validate();
  const std::size_t na = a.dim, nb = b.dim, n = na + nb;
  BiHomAlgebra out;
  out.dim = n;
  out.mul = Tensor3(n);
  out.alpha = Matrix(n, n);
  out.beta = Matrix(n, n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      for (std::size_t k = 0; k < na; ++k) out.mul(i, j, k) = a.mul(i, j, k);
      out.alpha(i, j) = a.alpha(i, j);
      out.beta(i, j) = a.beta(i, j);
    }
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      for (std::size_t k = 0; k < nb; ++k) out.mul(na + i, na + j, na + k) = b.mul(i, j, k);
      out.alpha(na + i, na + j) = b.alpha(i, j);
      out.beta(na + i, na + j) = b.beta(i, j);
    }
  if (a.unit && b.unit) {
    Vec u(*a.unit);
    u.insert(u.end(), b.unit->begin(), b.unit->end());
    out.unit = std::move(u);
  } else if (na == 0 && b.unit) {
    out.unit = b.unit;
  } else if (nb == 0 && a.unit) {
    out.unit = a.unit;
  }
  if (na == 0) out.label = b.label;
  else if (nb == 0) out.label = a.label;
  else if (!a.label.empty() || !b.label.empty()) out.label = a.label + "+" + b.label;
  return out;
}

BiHomAlgebra unital_extension(const BiHomAlgebra& a) {
  if (!check_axioms(a).passes()) throw PreconditionError("unital_extension: input fails its axioms");
  const std::size_t n = a.dim, m = n + 1;
  BiHomAlgebra out;
  out.dim = m;
  out.mul = Tensor3(m);
  out.alpha = Matrix(m, m);
  out.beta = Matrix(m, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out.mul(i, j, k) = a.mul(i, j, k);
      out.alpha(i, j) = a.alpha(i, j);
      out.beta(i, j) = a.beta(i, j);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      out.mul(i, n, k) = a.alpha(k, i);
      out.mul(n, i, k) = a.beta(k, i);
    }
  out.mul(n, n, n) = 1;
  out.alpha(n, n) = 1;
  out.beta(n, n) = 1;
  out.unit = basis_vec(m, n);
  out.label = a.label.empty() ? std::string() : a.label + "~";
  return out;
}

UntwistResult untwist(const BiHomAlgebra& a) {
  a.validate();
  UntwistResult r;
  const auto ai = inverse(a.alpha);
  const auto bi = inverse(a.beta);
  if (!ai || !bi) return r;
  const std::size_t n = a.dim;
  Tensor3 mu(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec z = eval_mul(a, ai->column(i), bi->column(j));
      for (std::size_t k = 0; k < n; ++k) mu(i, j, k) = z[k];
    }
  r.status = UntwistResult::Status::associative;
  for (std::size_t i = 0; i < n && r.witness.holds; ++i)
    for (std::size_t j = 0; j < n && r.witness.holds; ++j) {
      const Vec eij = eval_mul(mu, basis_vec(n, i), basis_vec(n, j));
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = eval_mul(mu, basis_vec(n, i), eval_mul(mu, basis_vec(n, j), basis_vec(n, k)));
        Vec rhs = eval_mul(mu, eij, basis_vec(n, k));
        if (lhs != rhs) {
          r.status = UntwistResult::Status::not_associative;
          r.witness = IdentityCheck::fail({i, j, k}, std::move(lhs), std::move(rhs));
          break;
        }
      }
    }
  r.mul = std::move(mu);
  return r;
}

SubalgebraCheck is_subalgebra(const BiHomAlgebra& a, const std::vector<Vec>& vectors) {
  a.validate();
  for (const auto& v : vectors)
    if (v.size() != a.dim) throw ShapeError("is_subalgebra: vector length differs from dimension");
  if (!vectors.empty() && rank(Matrix::from_columns(vectors, a.dim)) != vectors.size())
    throw std::invalid_argument("is_subalgebra: spanning vectors are linearly dependent");
  SubalgebraCheck s;
  for (std::size_t p = 0; p < vectors.size(); ++p)
    for (std::size_t q = 0; q < vectors.size(); ++q) {
      Vec z = eval_mul(a, vectors[p], vectors[q]);
      if (!in_span(vectors, z)) return {false, "product", {p, q}, std::move(z)};
    }
  for (std::size_t p = 0; p < vectors.size(); ++p) {
    Vec z = a.alpha.apply(vectors[p]);
    if (!in_span(vectors, z)) return {false, "alpha", {p}, std::move(z)};
  }
  for (std::size_t p = 0; p < vectors.size(); ++p) {
    Vec z = a.beta.apply(vectors[p]);
    if (!in_span(vectors, z)) return {false, "beta", {p}, std::move(z)};
  }
  return s;
}

std::vector<Vec> graph_basis(const Matrix& phi) {
  const std::size_t na = phi.cols(), nb = phi.rows();
  std::vector<Vec> out;
  for (std::size_t i = 0; i < na; ++i) {
    Vec v = basis_vec(na + nb, i);
    for (std::size_t j = 0; j < nb; ++j) v[na + j] = phi(j, i);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace bihom
