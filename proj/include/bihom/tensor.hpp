#pragma once

#include "bihom/matrix.hpp"

#include <cstddef>
#include <vector>

namespace bihom {

/// Cubic n x n x n array of rationals, index order (i, j, k).
class Tensor3 {
public:
  Tensor3() = default;
  explicit Tensor3(std::size_t n) : n_(n), data_(n * n * n, Rational(0)) {}

  std::size_t dim() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n_ + j) * n_ + k];
  }
  const std::vector<Rational>& entries() const { return data_; }
  bool is_zero() const;

  friend bool operator==(const Tensor3& a, const Tensor3& b) = default;

private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

/// Outcome of checking one identity over basis elements. On failure `at`
/// holds the first failing basis index tuple in lexicographic order and
/// `lhs`/`rhs` the two sides as flattened coordinates.
struct IdentityCheck {
  bool holds = true;
  std::vector<std::size_t> at;
  Vec lhs;
  Vec rhs;

  static IdentityCheck pass() { return {}; }
  static IdentityCheck fail(std::vector<std::size_t> at, Vec lhs, Vec rhs) {
    return {false, std::move(at), std::move(lhs), std::move(rhs)};
  }
};

/// Checks a == b entrywise, reporting the first differing entry (row, col).
IdentityCheck matrices_equal(const Matrix& a, const Matrix& b);

}  // namespace bihom
