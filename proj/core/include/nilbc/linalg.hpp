#pragma once

#include <cstddef>
#include <vector>

#include "nilbc/gaussian.hpp"

namespace nilbc {

/// Dense matrix over Q(i), row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Gaussian& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Gaussian& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Gaussian> data_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);

/// [a | b]; both must have the same row count.
ExactMatrix hconcat(const ExactMatrix& a, const ExactMatrix& b);
/// [a ; b]; both must have the same column count.
ExactMatrix vconcat(const ExactMatrix& a, const ExactMatrix& b);

/// Rank over Q(i) by fraction-free (Bareiss) elimination over Z[i].
///
/// Each row is first scaled by the lcm of its denominators. Pivots are taken as
/// the first nonzero entry in column order, so elimination is deterministic.
std::size_t exact_rank(const ExactMatrix& m);

/// Reduced row echelon form over Q(i) with zero rows dropped.
ExactMatrix row_basis(const ExactMatrix& m);

/// Determinant of a square matrix.
Gaussian determinant(const ExactMatrix& m);

}  // namespace nilbc
