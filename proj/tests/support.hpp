#pragma once

#include "bihom/algebra.hpp"
#include "bihom/bialgebra.hpp"
#include "bihom/coalgebra.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace fixture {

using bihom::BiHomAlgebra;
using bihom::BiHomCoalgebra;
using bihom::Matrix;
using bihom::Rational;
using bihom::Vec;

inline Vec vec(std::initializer_list<int> xs) {
  Vec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

// Map given by the images of the basis: images[i] are the coordinates of f(e_i).
inline Matrix by_images(const std::vector<std::vector<int>>& images) {
  const std::size_t n = images.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(j, i) = images[i][j];
  return m;
}

// products[i][j] are the coordinates of e_i * e_j.
inline BiHomAlgebra algebra(const std::vector<std::vector<std::vector<int>>>& products,
                            const std::vector<std::vector<int>>& alpha, const std::vector<std::vector<int>>& beta,
                            std::optional<Vec> unit = std::nullopt) {
  const std::size_t n = products.size();
  BiHomAlgebra a = BiHomAlgebra::zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) a.mul(i, j, k) = products[i][j][k];
  a.alpha = by_images(alpha);
  a.beta = by_images(beta);
  a.unit = std::move(unit);
  return a;
}

// coproducts[i][j][k] is the coefficient of e_j (x) e_k in Delta(e_i).
inline BiHomCoalgebra coalgebra(const std::vector<std::vector<std::vector<int>>>& coproducts,
                                const std::vector<std::vector<int>>& psi, const std::vector<std::vector<int>>& omega,
                                std::optional<Vec> counit = std::nullopt) {
  const std::size_t n = coproducts.size();
  BiHomCoalgebra c = BiHomCoalgebra::zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c.comul(i, j, k) = coproducts[i][j][k];
  c.psi = by_images(psi);
  c.omega = by_images(omega);
  c.counit = std::move(counit);
  return c;
}

inline const std::vector<std::vector<int>> id2 = {{1, 0}, {0, 1}};

// e1*e1=e2, e1*e2=e2, e2*e1=-e1, e2*e2=e2; beta(e1)=-e1
inline BiHomAlgebra h2_1() {
  return algebra({{{0, 1}, {0, 1}}, {{-1, 0}, {0, 1}}}, id2, {{-1, 0}, {0, 1}});
}
// e1 two-sided identity, e2*e2=e2
inline BiHomAlgebra h2_3() { return algebra({{{1, 0}, {0, 1}}, {{0, 1}, {0, 1}}}, id2, id2); }
// e2 two-sided identity, e1*e1=e1
inline BiHomAlgebra h2_6() { return algebra({{{1, 0}, {1, 0}}, {{1, 0}, {0, 1}}}, id2, id2); }
// e2*e2=e1; alpha(e2)=e1+e2
inline BiHomAlgebra h2_13() { return algebra({{{0, 0}, {0, 0}}, {{0, 0}, {1, 0}}}, {{1, 0}, {1, 1}}, id2); }
// unital, e2*e2=e2
inline BiHomAlgebra hu2_4() { return algebra({{{1, 0}, {0, 1}}, {{0, 1}, {0, 1}}}, id2, id2, vec({1, 0})); }
// unital, e2*e2=e1
inline BiHomAlgebra group_algebra_c2() {
  return algebra({{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}}, id2, id2, vec({1, 0}));
}
inline BiHomCoalgebra grouplike2() {
  return coalgebra({{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}}, id2, id2, vec({1, 1}));
}
inline BiHomAlgebra base_field() {
  BiHomAlgebra a = BiHomAlgebra::zero(1);
  a.mul(0, 0, 0) = 1;
  a.unit = vec({1});
  return a;
}
inline BiHomCoalgebra base_field_coalgebra() {
  BiHomCoalgebra c = BiHomCoalgebra::zero(1);
  c.comul(0, 0, 0) = 1;
  c.counit = vec({1});
  return c;
}

// Deterministic generator for property tests.
class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  Matrix matrix(std::size_t n, int lo = -3, int hi = 3) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = integer(lo, hi);
    return m;
  }

  Matrix invertible(std::size_t n, int lo = -3, int hi = 3) {
    for (;;) {
      Matrix m = matrix(n, lo, hi);
      if (!bihom::det(m).is_zero()) return m;
    }
  }

  Vec vector(std::size_t n, int lo = -3, int hi = 3) {
    Vec v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(integer(lo, hi));
    return v;
  }

private:
  std::mt19937_64 rng_;
};

}  // namespace fixture
