#pragma once

#include <cstddef>
#include <vector>

#include "kappa/rational.hpp"

namespace kappa {

// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit RationalMatrix(const std::vector<std::vector<Rational>>& rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  RationalMatrix submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank over Q. Each row is scaled to integers by the LCM of its
/// denominators, then reduced by fraction-free Bareiss elimination with the
/// first nonzero entry of each column as pivot.
std::size_t exact_rank(const RationalMatrix& m);

/// Determinant over Q via the same integer Bareiss pass. Square only.
Rational determinant(const RationalMatrix& m);

/// Gauss-Jordan inverse over Q. Throws std::domain_error when singular.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace kappa
