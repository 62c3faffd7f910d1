#pragma once

#include "bihom/algebra.hpp"
#include "bihom/groebner.hpp"
#include "bihom/invariants.hpp"

#include <optional>
#include <string>

namespace bihom {

struct IsoOptions {
  GroebnerOptions groebner;
  /// Maximum number of candidate matrices tried by the grid search.
  std::size_t grid_cap = 20000;
  /// Maximum number of Groebner computations in the rational point search.
  std::size_t point_search_cap = 200;
};

struct IsoVerdict {
  enum class Status { isomorphic, not_isomorphic, unknown };
  Status status = Status::unknown;
  /// How the verdict was reached: "identity", "grid-search", "point-search",
  /// "invariant-mismatch", "trivial-ideal", "budget-exceeded" or "no-rational-witness".
  std::string method;
  std::optional<Matrix> witness;
  std::optional<FingerprintCertificate> invariant;
  /// For trivial-ideal certificates: the constant found in the basis.
  std::optional<Rational> constant;
  std::string reason;
};

std::string status_name(IsoVerdict::Status s);

/// Decides whether two algebras of equal dimension are isomorphic:
/// fingerprints, bounded witness search, Groebner triviality of the
/// isomorphism system, then a Groebner-guided rational point search.
/// Throws ShapeError on a dimension mismatch.
IsoVerdict decide_isomorphic(const BiHomAlgebra& a, const BiHomAlgebra& b, const IsoOptions& options = {});

/// Canonical text of the structure constants and twists (no unit, no label).
std::string structure_key(const BiHomAlgebra& a);

}  // namespace bihom
