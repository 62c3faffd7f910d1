#pragma once

#include "bihom/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bihom {

/// Coordinate vector in a fixed basis.
using Vec = std::vector<Rational>;

class ShapeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

Vec zero_vec(std::size_t n);
Vec basis_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& s, const Vec& v);
std::string vec_str(const Vec& v);

/// Dense exact matrix, row-major.
///
/// A linear map f is stored by columns: column i holds the coordinates of
/// f(e_i), so entry (j, i) is the coefficient of e_j in f(e_i).
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vec>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const std::vector<Rational>& entries() const { return data_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;
  Matrix transpose() const;
  Vec apply(const Vec& v) const;

  bool is_zero() const;
  bool is_identity() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string str() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.
Rational det(const Matrix& m);

/// Inverse by Gauss-Jordan elimination; std::nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Reduced row echelon form together with the pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
Echelon rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column in increasing order.
std::vector<Vec> nullspace(const Matrix& m);

/// Canonical solution of m x = rhs: free variables set to zero.
struct LinearSolution {
  Vec particular;
  std::size_t free_count = 0;
};
std::optional<LinearSolution> solve(const Matrix& m, const Vec& rhs);

/// True when v lies in the column span of `span` (columns as vectors).
bool in_span(const std::vector<Vec>& span, const Vec& v);

}  // namespace bihom
