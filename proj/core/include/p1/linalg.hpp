#pragma once

// Dense matrices over Q and the handful of exact operations the rest of the
// library needs: rank, determinant, products.

#include <cstddef>
#include <vector>

#include "p1/numeric.hpp"

namespace p1 {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Matrix whose rows are the given vectors (all of equal length `cols`).
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  std::vector<Rational> column(std::size_t j) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// Exact rank over Q.
std::size_t rank(const Matrix& m);

/// cols - rank: dimension of the right null space.
inline std::size_t nullity(const Matrix& m) { return m.cols() - rank(m); }

/// Exact determinant of a square matrix.
Rational determinant(const Matrix& m);

/// Rank of the span of the given vectors (each of length `dim`).
std::size_t span_rank(const std::vector<std::vector<Rational>>& vectors, std::size_t dim);

}  // namespace p1
