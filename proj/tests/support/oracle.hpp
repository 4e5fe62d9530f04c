#pragma once

// Independent reference implementations for the test suites. Nothing here
// shares code with the library's elimination routines.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "nilbc/linalg.hpp"

namespace nilbc::testing {

/// Plain Gauss-Jordan over Q(i) with field division, on a copy of the entries.
inline std::size_t naive_rank(const ExactMatrix& m) {
  std::vector<std::vector<Gaussian>> a(m.rows(), std::vector<Gaussian>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c].is_zero()) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    const Gaussian inv = Gaussian(1) / a[rank][c];
    for (auto& x : a[rank]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      const Gaussian factor = a[r][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= factor * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Gaussian rational with small numerators and denominators, zero with
/// probability `zero_bias`.
inline Gaussian random_gaussian(std::mt19937_64& rng, double zero_bias = 0.3) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  if (coin(rng) < zero_bias) return 0;
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  const Gaussian re = Gaussian::rational(num(rng), den(rng));
  const Gaussian im = Gaussian::rational(num(rng), den(rng));
  return re + Gaussian::i() * im;
}

inline ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                 double zero_bias = 0.3) {
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_gaussian(rng, zero_bias);
  }
  return m;
}

/// Product of random rows x k and k x cols factors: rank at most k, usually exactly k.
inline ExactMatrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                   std::size_t k) {
  return random_matrix(rng, rows, k, 0.2) * random_matrix(rng, k, cols, 0.2);
}

}  // namespace nilbc::testing
