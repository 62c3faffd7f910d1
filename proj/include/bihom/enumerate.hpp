#pragma once

#include "bihom/bialgebra.hpp"
#include "bihom/groebner.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bihom {

/// Raised when an exhaustive search would exceed its configured cap.
class SearchRefused : public std::runtime_error {
public:
  SearchRefused(const std::string& what, double estimate) : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const { return estimate_; }

private:
  double estimate_;
};

/// All common zeros of the ideal over F_p, in lexicographic order of the
/// assignments. Refuses when p^nvars exceeds `cap` or p is not prime.
std::vector<std::vector<std::uint64_t>> enumerate_points_mod_p(const Ideal& ideal, std::uint64_t p,
                                                               double cap = 1e7);

struct ComulSearchOptions {
  std::vector<Rational> grid = {-2, -1, 0, 1, 2};
  /// Maximum number of nonzero coefficients in each Delta(e_i).
  std::size_t sparsity = static_cast<std::size_t>(-1);
  /// Also solve for a counit and require the counit and unit/counit laws.
  bool counital = false;
  /// Maximum number of candidate tensors.
  double cap = 2e6;
};

/// Every comultiplication tensor over the grid that makes (a, Delta, psi,
/// omega) pass check_compatibility. In counital mode the counit is the
/// canonical solution of its linear conditions.
std::vector<BiHomBialgebra> enumerate_comultiplications(const BiHomAlgebra& a, const Matrix& psi, const Matrix& omega,
                                                        const ComulSearchOptions& options = {});

/// Number of candidate tensors the search would examine.
double comultiplication_search_size(std::size_t n, const ComulSearchOptions& options);

}  // namespace bihom
