#include "bihom/invariants.hpp"

namespace bihom {

namespace {

std::string factors_str(const std::vector<UPoly>& fs) {
  std::string s = "[";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) s += ", ";
    s += fs[i].str();
  }
  return s + "]";
}

}  // namespace

std::vector<std::pair<std::string, std::string>> Fingerprint::fields() const {
  return {
      {"dim", std::to_string(dim)},
      {"alpha_invariant_factors", factors_str(alpha_invariant_factors)},
      {"beta_invariant_factors", factors_str(beta_invariant_factors)},
      {"mul_rank", std::to_string(mul_rank)},
      {"ann_left", std::to_string(ann_left)},
      {"ann_right", std::to_string(ann_right)},
      {"ann_two_sided", std::to_string(ann_two_sided)},
      {"commutative", commutative ? "true" : "false"},
      {"has_unit", has_unit ? "true" : "false"},
  };
}

std::optional<Vec> find_unit(const BiHomAlgebra& a) {
  a.validate();
  const std::size_t n = a.dim;
  // unknown e; rows: mu(e_i, e)_k, mu(e, e_i)_k, alpha(e)_k, beta(e)_k
  Matrix m(2 * n * n + 2 * n, n);
  Vec rhs = zero_vec(2 * n * n + 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        m(i * n + k, j) = a.mul(i, j, k);
        m(n * n + i * n + k, j) = a.mul(j, i, k);
      }
      rhs[i * n + k] = a.alpha(k, i);
      rhs[n * n + i * n + k] = a.beta(k, i);
    }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      m(2 * n * n + k, j) = a.alpha(k, j) - Rational(k == j ? 1 : 0);
      m(2 * n * n + n + k, j) = a.beta(k, j) - Rational(k == j ? 1 : 0);
    }
  auto sol = solve(m, rhs);
  if (!sol) return std::nullopt;
  return sol->particular;
}

Fingerprint fingerprint(const BiHomAlgebra& a) {
  a.validate();
  const std::size_t n = a.dim;
  Fingerprint f;
  f.dim = n;
  f.alpha_invariant_factors = invariant_factors(a.alpha);
  f.beta_invariant_factors = invariant_factors(a.beta);

  Matrix mul(n, n * n);
  Matrix left(n * n, n), right(n * n, n), both(2 * n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        mul(k, i * n + j) = a.mul(i, j, k);
        // x in ann_left iff sum_i x_i mul(i, j, k) = 0 for all j, k
        left(j * n + k, i) = a.mul(i, j, k);
        right(j * n + k, i) = a.mul(j, i, k);
        both(j * n + k, i) = a.mul(i, j, k);
        both(n * n + j * n + k, i) = a.mul(j, i, k);
        if (a.mul(i, j, k) != a.mul(j, i, k)) f.commutative = false;
      }
  f.mul_rank = rank(mul);
  f.ann_left = n - rank(left);
  f.ann_right = n - rank(right);
  f.ann_two_sided = n - rank(both);
  f.has_unit = find_unit(a).has_value();
  return f;
}

std::optional<FingerprintCertificate> fingerprints_distinguish(const BiHomAlgebra& a, const BiHomAlgebra& b) {
  if (a.dim != b.dim) return FingerprintCertificate{"dim", std::to_string(a.dim), std::to_string(b.dim)};
  const auto fa = fingerprint(a).fields();
  const auto fb = fingerprint(b).fields();
  for (std::size_t i = 0; i < fa.size(); ++i)
    if (fa[i].second != fb[i].second) return FingerprintCertificate{fa[i].first, fa[i].second, fb[i].second};
  return std::nullopt;
}

}  // namespace bihom
