#include "nilbc/linalg.hpp"

#include <utility>

#include "nilbc/error.hpp"

namespace nilbc {
namespace {

// Element of Z[i] used inside the fraction-free elimination.
struct GaussInt {
  mpz_class re;
  mpz_class im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

// a / b where b divides a exactly in Z[i].
GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  const mpz_class n = b.re * b.re + b.im * b.im;
  const mpz_class re = a.re * b.re + a.im * b.im;
  const mpz_class im = a.im * b.re - a.re * b.im;
  if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t())) {
    throw ArithmeticError("inexact Bareiss division");
  }
  GaussInt q;
  mpz_divexact(q.re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(q.im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
  return q;
}

std::vector<std::vector<GaussInt>> integral_rows(const ExactMatrix& m) {
  std::vector<std::vector<GaussInt>> rows(m.rows(), std::vector<GaussInt>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Gaussian& z = m(r, c);
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.re().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.im().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Gaussian& z = m(r, c);
      rows[r][c].re = z.re().get_num() * (l / z.re().get_den());
      rows[r][c].im = z.im().get_num() * (l / z.im().get_den());
    }
  }
  return rows;
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& z : data_) {
    if (!z.is_zero()) return false;
  }
  return true;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  ExactMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Gaussian& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix sum shape mismatch");
  }
  ExactMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

ExactMatrix hconcat(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hconcat row mismatch");
  ExactMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

ExactMatrix vconcat(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("vconcat column mismatch");
  ExactMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  }
  return out;
}

std::size_t exact_rank(const ExactMatrix& m) {
  auto a = integral_rows(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  GaussInt prev{1, 0};
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const GaussInt& pv = a[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const GaussInt factor = a[r][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[r][j] = exact_div(sub(mul(pv, a[r][j]), mul(factor, a[rank][j])), prev);
      }
      a[r][c] = GaussInt{};
    }
    prev = pv;
    ++rank;
  }
  return rank;
}

ExactMatrix row_basis(const ExactMatrix& m) {
  ExactMatrix a = m;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && a(pivot, c).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(rank, j));
    const Gaussian inv = Gaussian(1) / a(rank, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(rank, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == rank || a(r, c).is_zero()) continue;
      const Gaussian f = a(r, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) -= f * a(rank, j);
    }
    ++rank;
  }
  ExactMatrix out(rank, a.cols());
  for (std::size_t r = 0; r < rank; ++r) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(r, j) = a(r, j);
  }
  return out;
}

Gaussian determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  ExactMatrix a = m;
  const std::size_t n = a.rows();
  Gaussian det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c).is_zero()) ++pivot;
    if (pivot == n) return Gaussian();
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const Gaussian f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

}  // namespace nilbc
