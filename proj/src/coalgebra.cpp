#include "bihom/coalgebra.hpp"

namespace bihom {

BiHomCoalgebra BiHomCoalgebra::zero(std::size_t n) {
  BiHomCoalgebra c;
  c.dim = n;
  c.comul = Tensor3(n);
  c.psi = Matrix::identity(n);
  c.omega = Matrix::identity(n);
  return c;
}

void BiHomCoalgebra::validate() const {
  if (comul.dim() != dim) throw ShapeError("comultiplication tensor does not match dimension");
  if (psi.rows() != dim || psi.cols() != dim) throw ShapeError("psi does not match dimension");
  if (omega.rows() != dim || omega.cols() != dim) throw ShapeError("omega does not match dimension");
  if (counit && counit->size() != dim) throw ShapeError("counit does not match dimension");
}

Vec eval_comul(const BiHomCoalgebra& c, const Vec& v) {
  const std::size_t n = c.dim;
  if (v.size() != n) throw ShapeError("eval_comul: vector length differs from dimension");
  Vec t = zero_vec(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!c.comul(i, j, k).is_zero()) t[j * n + k] += v[i] * c.comul(i, j, k);
  }
  return t;
}

Vec apply_tensor2(const Matrix& f, const Matrix& g, const Vec& t) {
  const std::size_t n = f.cols();
  Vec out = zero_vec(f.rows() * g.rows());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& x = t[j * n + k];
      if (x.is_zero()) continue;
      for (std::size_t a = 0; a < f.rows(); ++a) {
        if (f(a, j).is_zero()) continue;
        for (std::size_t b = 0; b < g.rows(); ++b)
          if (!g(b, k).is_zero()) out[a * g.rows() + b] += x * f(a, j) * g(b, k);
      }
    }
  return out;
}

namespace {

IdentityCheck check_comultiplicative(const BiHomCoalgebra& c, const Matrix& f) {
  const std::size_t n = c.dim;
  for (std::size_t i = 0; i < n; ++i) {
    Vec lhs = apply_tensor2(f, f, eval_comul(c, basis_vec(n, i)));
    Vec rhs = eval_comul(c, f.column(i));
    if (lhs != rhs) return IdentityCheck::fail({i}, std::move(lhs), std::move(rhs));
  }
  return IdentityCheck::pass();
}

}  // namespace

CoalgebraReport check_coalgebra_axioms(const BiHomCoalgebra& c) {
  c.validate();
  const std::size_t n = c.dim;
  CoalgebraReport r;
  r.twists_commute = matrices_equal(c.psi * c.omega, c.omega * c.psi);
  r.psi_comultiplicative = check_comultiplicative(c, c.psi);
  r.omega_comultiplicative = check_comultiplicative(c, c.omega);
  for (std::size_t i = 0; i < n; ++i) {
    Vec lhs = zero_vec(n * n * n), rhs = zero_vec(n * n * n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& d = c.comul(i, j, k);
        if (d.is_zero()) continue;
        // (Delta (x) psi): Delta(e_j) (x) psi(e_k)
        const Vec dj = eval_comul(c, basis_vec(n, j));
        for (std::size_t ab = 0; ab < n * n; ++ab)
          for (std::size_t z = 0; z < n; ++z)
            if (!dj[ab].is_zero() && !c.psi(z, k).is_zero()) lhs[ab * n + z] += d * dj[ab] * c.psi(z, k);
        // (omega (x) Delta): omega(e_j) (x) Delta(e_k)
        const Vec dk = eval_comul(c, basis_vec(n, k));
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t bz = 0; bz < n * n; ++bz)
            if (!c.omega(a, j).is_zero() && !dk[bz].is_zero()) rhs[a * n * n + bz] += d * c.omega(a, j) * dk[bz];
      }
    if (lhs != rhs) {
      r.coassociative = IdentityCheck::fail({i}, std::move(lhs), std::move(rhs));
      break;
    }
  }
  return r;
}

CounitReport check_counit(const BiHomCoalgebra& c) {
  c.validate();
  CounitReport r;
  if (!c.counit) return r;
  const std::size_t n = c.dim;
  const Vec& eps = *c.counit;
  auto fail = [&](const char* law, IdentityCheck w) {
    r.status = UnitStatus::fail;
    r.law = law;
    r.witness = std::move(w);
  };
  r.status = UnitStatus::pass;
  for (std::size_t i = 0; i < n && r.passes(); ++i) {
    Vec lhs = zero_vec(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) lhs[j] += c.comul(i, j, k) * eps[k];
    if (lhs != c.omega.column(i)) fail("(id(x)eps)Delta=omega", IdentityCheck::fail({i}, lhs, c.omega.column(i)));
  }
  for (std::size_t i = 0; i < n && r.passes(); ++i) {
    Vec lhs = zero_vec(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) lhs[k] += c.comul(i, j, k) * eps[j];
    if (lhs != c.psi.column(i)) fail("(eps(x)id)Delta=psi", IdentityCheck::fail({i}, lhs, c.psi.column(i)));
  }
  const Vec eps_psi = c.psi.transpose().apply(eps);
  for (std::size_t i = 0; i < n && r.passes(); ++i)
    if (eps_psi[i] != eps[i]) fail("eps psi=eps", IdentityCheck::fail({i}, {eps_psi[i]}, {eps[i]}));
  const Vec eps_omega = c.omega.transpose().apply(eps);
  for (std::size_t i = 0; i < n && r.passes(); ++i)
    if (eps_omega[i] != eps[i]) fail("eps omega=eps", IdentityCheck::fail({i}, {eps_omega[i]}, {eps[i]}));
  return r;
}

BiHomCoalgebra dualize_algebra(const BiHomAlgebra& a) {
  a.validate();
  const std::size_t n = a.dim;
  BiHomCoalgebra c;
  c.dim = n;
  c.comul = Tensor3(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c.comul(i, j, k) = a.mul(j, k, i);
  c.psi = a.beta.transpose();
  c.omega = a.alpha.transpose();
  c.counit = a.unit;
  c.label = a.label;
  return c;
}

BiHomAlgebra dualize_coalgebra(const BiHomCoalgebra& c) {
  c.validate();
  const std::size_t n = c.dim;
  BiHomAlgebra a;
  a.dim = n;
  a.mul = Tensor3(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) a.mul(i, j, k) = c.comul(k, i, j);
  a.alpha = c.omega.transpose();
  a.beta = c.psi.transpose();
  a.unit = c.counit;
  a.label = c.label;
  return a;
}

BiHomCoalgebra transport_coalgebra(const BiHomCoalgebra& c, const Matrix& phi) {
  c.validate();
  if (phi.rows() != c.dim || phi.cols() != c.dim) throw ShapeError("transport_coalgebra: phi has wrong shape");
  const auto inv = inverse(phi);
  if (!inv) throw PreconditionError("transport_coalgebra: phi is not invertible");
  const std::size_t n = c.dim;
  BiHomCoalgebra out;
  out.dim = n;
  out.comul = Tensor3(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec t = apply_tensor2(phi, phi, eval_comul(c, inv->column(i)));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.comul(i, j, k) = t[j * n + k];
  }
  out.psi = phi * c.psi * *inv;
  out.omega = phi * c.omega * *inv;
  if (c.counit) out.counit = inv->transpose().apply(*c.counit);
  out.label = c.label;
  return out;
}

}  // namespace bihom
