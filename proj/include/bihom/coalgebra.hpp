#pragma once

#include "bihom/algebra.hpp"

#include <optional>
#include <string>

namespace bihom {

/// Finite-dimensional BiHom-coalgebra. comul(i, j, k) is the coefficient of
/// e_j (x) e_k in Delta(e_i). psi and omega are stored by columns; the counit
/// is the row (eps(e_1), ..., eps(e_n)).
struct BiHomCoalgebra {
  std::size_t dim = 0;
  Tensor3 comul;
  Matrix psi;
  Matrix omega;
  std::optional<Vec> counit;
  std::string label;

  static BiHomCoalgebra zero(std::size_t n);
  void validate() const;

  friend bool operator==(const BiHomCoalgebra&, const BiHomCoalgebra&) = default;
};

/// Delta(v) as coordinates of a tensor in V (x) V, index j*n + k.
Vec eval_comul(const BiHomCoalgebra& c, const Vec& v);

/// (f (x) g) applied to a flattened order-2 tensor.
Vec apply_tensor2(const Matrix& f, const Matrix& g, const Vec& t);

struct CoalgebraReport {
  IdentityCheck twists_commute;           // psi omega = omega psi, at = (row, col)
  IdentityCheck psi_comultiplicative;     // (psi (x) psi) Delta = Delta psi, at = (i)
  IdentityCheck omega_comultiplicative;
  IdentityCheck coassociative;            // (Delta (x) psi) Delta = (omega (x) Delta) Delta, at = (i)

  bool passes() const {
    return twists_commute.holds && psi_comultiplicative.holds && omega_comultiplicative.holds &&
           coassociative.holds;
  }
};

CoalgebraReport check_coalgebra_axioms(const BiHomCoalgebra& c);

struct CounitReport {
  UnitStatus status = UnitStatus::not_applicable;
  /// "(id(x)eps)Delta=omega", "(eps(x)id)Delta=psi", "eps psi=eps" or "eps omega=eps".
  std::string law;
  IdentityCheck witness;

  bool passes() const { return status == UnitStatus::pass; }
};

CounitReport check_counit(const BiHomCoalgebra& c);

/// Dual coalgebra on the dual space: D_i^{jk} = C[j][k][i], psi = beta^T,
/// omega = alpha^T, counit = unit.
BiHomCoalgebra dualize_algebra(const BiHomAlgebra& a);

/// Inverse of dualize_algebra: C[i][j][k] = D[k][i][j], alpha = omega^T,
/// beta = psi^T, unit = counit.
BiHomAlgebra dualize_coalgebra(const BiHomCoalgebra& c);

/// Base change by invertible phi: ((phi(x)phi) Delta phi^-1, phi psi phi^-1,
/// phi omega phi^-1, eps phi^-1).
BiHomCoalgebra transport_coalgebra(const BiHomCoalgebra& c, const Matrix& phi);

}  // namespace bihom
