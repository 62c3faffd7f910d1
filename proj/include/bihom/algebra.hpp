#pragma once

#include "bihom/matrix.hpp"
#include "bihom/tensor.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bihom {

class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Finite-dimensional BiHom-algebra given by structure constants.
///
/// mul(i, j, k) is the coefficient of e_k in e_i * e_j. The twist maps alpha
/// and beta are stored by columns (see Matrix). Nothing here is assumed to
/// satisfy any axiom; use check_axioms.
struct BiHomAlgebra {
  std::size_t dim = 0;
  Tensor3 mul;
  Matrix alpha;
  Matrix beta;
  std::optional<Vec> unit;
  std::string label;

  /// Zero multiplication, identity twists.
  static BiHomAlgebra zero(std::size_t n);
  /// Throws ShapeError when the parts disagree on the dimension.
  void validate() const;

  friend bool operator==(const BiHomAlgebra&, const BiHomAlgebra&) = default;
};

enum class UnitStatus { pass, fail, not_applicable };

struct AxiomReport {
  IdentityCheck bihom_associative;     // alpha(x)(yz) = (xy)beta(z), at = (i, j, k)
  IdentityCheck alpha_multiplicative;  // alpha(xy) = alpha(x)alpha(y), at = (i, j)
  IdentityCheck beta_multiplicative;
  IdentityCheck twists_commute;        // alpha beta = beta alpha, at = (row, col)
  UnitStatus unit_laws = UnitStatus::not_applicable;
  /// Failing unit law: "x*u=alpha(x)", "u*x=beta(x)", "alpha(u)=u", "beta(u)=u".
  std::string unit_law;
  IdentityCheck unit_witness;

  /// The four structural axioms, ignoring unit laws.
  bool structure_passes() const {
    return bihom_associative.holds && alpha_multiplicative.holds && beta_multiplicative.holds &&
           twists_commute.holds;
  }
  bool passes() const { return structure_passes() && unit_laws != UnitStatus::fail; }
};

/// z_k = sum_{i,j} x_i y_j mul(i, j, k)
Vec eval_mul(const BiHomAlgebra& a, const Vec& x, const Vec& y);
Vec eval_mul(const Tensor3& mul, const Vec& x, const Vec& y);

AxiomReport check_axioms(const BiHomAlgebra& a);

/// Transport of structure by an invertible phi:
/// (phi mu (phi^-1 x phi^-1), phi alpha phi^-1, phi beta phi^-1), unit phi(u).
BiHomAlgebra transport(const BiHomAlgebra& a, const Matrix& phi);

/// (gamma mu, gamma alpha, gamma beta). gamma must be an endomorphism of a;
/// otherwise PreconditionError names the violated identity.
BiHomAlgebra yau_twist(const BiHomAlgebra& a, const Matrix& gamma);

/// Block direct sum; the zero-dimensional algebra is its identity. The unit
/// is (u_a, u_b) when both summands carry one.
BiHomAlgebra direct_sum(const BiHomAlgebra& a, const BiHomAlgebra& b);

/// Adjoins a new last basis vector u with x u = alpha(x), u x = beta(x),
/// u u = u and alpha(u) = beta(u) = u. Requires a to pass check_axioms.
BiHomAlgebra unital_extension(const BiHomAlgebra& a);

struct UntwistResult {
  enum class Status { associative, not_associative, twists_not_invertible };
  Status status = Status::twists_not_invertible;
  /// mu'(x, y) = mu(alpha^-1 x, beta^-1 y); present unless the twists are singular.
  std::optional<Tensor3> mul;
  /// First non-associative basis triple of mu' (with both sides).
  IdentityCheck witness;
};
UntwistResult untwist(const BiHomAlgebra& a);

struct MorphismCheck {
  bool holds = true;
  /// "phi(xy)=phi(x)phi(y)", "alpha_B phi=phi alpha_A", "beta_B phi=phi beta_A" or "phi(u_A)=u_B".
  std::string identity;
  IdentityCheck witness;
};

/// The three identities phi mu_A = mu_B (phi x phi), alpha_B phi = phi alpha_A,
/// beta_B phi = phi beta_A; with require_unital also phi(u_A) = u_B.
MorphismCheck is_morphism(const BiHomAlgebra& a, const BiHomAlgebra& b, const Matrix& phi,
                          bool require_unital = false);

struct SubalgebraCheck {
  bool holds = true;
  /// "product", "alpha" or "beta"; `at` are indices into the spanning list.
  std::string closure;
  std::vector<std::size_t> at;
  Vec outside;
};

/// Closure of span(vectors) under mu, alpha and beta. Throws
/// std::invalid_argument when the vectors are linearly dependent.
SubalgebraCheck is_subalgebra(const BiHomAlgebra& a, const std::vector<Vec>& vectors);

/// Basis {(e_i, phi(e_i))} of the graph of phi inside direct_sum(A, B).
std::vector<Vec> graph_basis(const Matrix& phi);

}  // namespace bihom
