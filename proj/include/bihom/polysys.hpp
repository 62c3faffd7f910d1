#pragma once

#include "bihom/algebra.hpp"
#include "bihom/groebner.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bihom {

/// Which parts of the structure are unknowns in gen_variety_system.
struct VarietyMask {
  bool mul = true;
  bool alpha = true;
  bool beta = true;
};

/// Polynomial system of the BiHom-associative axioms. Unknowns are named
/// c_i_j_k (coefficient of e_k in e_i e_j), a_j_i and b_j_i (coefficient of
/// e_j in alpha(e_i), beta(e_i)), all 1-based, in that order. Parts not in
/// `mask` are taken from `fixed`. With `unit`, the unit laws for that fixed
/// unit vector are added. Identically zero generators are pruned.
Ideal gen_variety_system(std::size_t n, VarietyMask mask = {}, const std::optional<BiHomAlgebra>& fixed = std::nullopt,
                         const std::optional<Vec>& unit = std::nullopt);

/// Values of the variety system's unknowns for a concrete algebra.
std::vector<Rational> variety_point(const Ideal& system, const BiHomAlgebra& a);

/// Evaluates every generator at the point; returns the index of the first
/// nonzero value, if any.
std::optional<std::size_t> first_nonvanishing(const Ideal& system, const std::vector<Rational>& point);

/// Isomorphism system in d_p_q (coefficient of e_p in phi(e_q)) and t:
/// phi mu_A = mu_B (phi x phi), alpha_B phi = phi alpha_A,
/// beta_B phi = phi beta_A and det(phi) t - 1.
Ideal gen_iso_system(const BiHomAlgebra& a, const BiHomAlgebra& b);

/// gen_iso_system(a, a).
Ideal gen_stabilizer_system(const BiHomAlgebra& a);

/// Point (d_p_q..., t) of the iso system for an invertible phi.
std::vector<Rational> iso_point(const Matrix& phi);
/// phi read back from the d_p_q coordinates of an iso system point.
Matrix iso_matrix(const std::vector<Rational>& point, std::size_t n);

}  // namespace bihom
