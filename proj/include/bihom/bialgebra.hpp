#pragma once

#include "bihom/algebra.hpp"
#include "bihom/coalgebra.hpp"

#include <optional>
#include <string>

namespace bihom {

struct BiHomBialgebra {
  BiHomAlgebra alg;
  BiHomCoalgebra coa;

  std::size_t dim() const { return alg.dim; }
  /// Throws ShapeError when the two layers disagree on the dimension.
  void validate() const;
  bool has_unit_and_counit() const { return alg.unit.has_value() && coa.counit.has_value(); }

  friend bool operator==(const BiHomBialgebra&, const BiHomBialgebra&) = default;
};

struct CompatibilityReport {
  AxiomReport algebra;
  CoalgebraReport coalgebra;
  CounitReport counit;

  IdentityCheck comul_multiplicative;    // Delta(xy) = x1 y1 (x) x2 y2, at = (i, j)
  IdentityCheck alpha_psi_commute;       // matrix identities, at = (row, col)
  IdentityCheck alpha_omega_commute;
  IdentityCheck beta_psi_commute;
  IdentityCheck beta_omega_commute;
  IdentityCheck alpha_comultiplicative;  // (alpha (x) alpha) Delta = Delta alpha, at = (i)
  IdentityCheck beta_comultiplicative;
  IdentityCheck psi_multiplicative;      // psi(xy) = psi(x) psi(y), at = (i, j)
  IdentityCheck omega_multiplicative;

  UnitStatus unit_counit = UnitStatus::not_applicable;
  /// "Delta(u)=u(x)u", "eps(u)=1", "psi(u)=u", "omega(u)=u", "eps alpha=eps",
  /// "eps beta=eps" or "eps(xy)=eps(x)eps(y)".
  std::string unit_counit_law;
  IdentityCheck unit_counit_witness;

  bool compatibility_passes() const;
  bool passes() const;
  /// Name of the first failing check in report order, if any.
  std::optional<std::string> first_failure() const;
};

CompatibilityReport check_compatibility(const BiHomBialgebra& b);

struct AntipodeResult {
  enum class Status { found, none, not_applicable };
  Status status = Status::not_applicable;
  std::optional<Matrix> antipode;
  std::size_t solution_space_dim = 0;
  std::string reason;
};

/// Solves the linear system for S: both convolution identities on every
/// basis element and S commuting with alpha, beta, psi and omega. Refuses
/// (not_applicable) without unit and counit or when check_compatibility fails.
AntipodeResult solve_antipode(const BiHomBialgebra& b);

/// The assembled system M s = rhs in the unknowns S(j, i), ordered j*n + i.
struct AntipodeSystem {
  Matrix m;
  Vec rhs;
};
AntipodeSystem antipode_system(const BiHomBialgebra& b);

struct AntipodeCheck {
  bool holds = true;
  /// "psi omega S(h1) alpha beta(h2)=eps(h)u", "beta psi(h1) alpha omega S(h2)=eps(h)u",
  /// "S alpha=alpha S", "S beta=beta S", "S psi=psi S" or "S omega=omega S".
  std::string identity;
  IdentityCheck witness;
};

/// Evaluates the antipode identities directly for a given S. Throws
/// PreconditionError without unit and counit.
AntipodeCheck check_antipode(const BiHomBialgebra& b, const Matrix& s);

}  // namespace bihom
