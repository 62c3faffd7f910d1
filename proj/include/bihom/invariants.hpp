#pragma once

#include "bihom/algebra.hpp"
#include "bihom/upoly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bihom {

struct Fingerprint {
  std::size_t dim = 0;
  std::vector<UPoly> alpha_invariant_factors;
  std::vector<UPoly> beta_invariant_factors;
  std::size_t mul_rank = 0;
  std::size_t ann_left = 0;
  std::size_t ann_right = 0;
  std::size_t ann_two_sided = 0;
  bool commutative = true;
  bool has_unit = false;

  /// (name, rendered value) in the fixed comparison order.
  std::vector<std::pair<std::string, std::string>> fields() const;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const BiHomAlgebra& a);

/// Some e with mu(x, e) = alpha(x), mu(e, x) = beta(x), alpha(e) = beta(e) = e.
std::optional<Vec> find_unit(const BiHomAlgebra& a);

struct FingerprintCertificate {
  std::string field;
  std::string value_a;
  std::string value_b;
};

/// First differing fingerprint field, or nothing when all agree.
std::optional<FingerprintCertificate> fingerprints_distinguish(const BiHomAlgebra& a, const BiHomAlgebra& b);

}  // namespace bihom
