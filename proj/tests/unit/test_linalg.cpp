#include <gtest/gtest.h>

#include <random>

#include "nilbc/error.hpp"
#include "nilbc/linalg.hpp"
#include "oracle.hpp"

using namespace nilbc;
using nilbc::testing::naive_rank;
using nilbc::testing::random_low_rank;
using nilbc::testing::random_matrix;

TEST(ExactRank, AgreesWithNaiveOracleOnRandomMatrices) {
  std::mt19937_64 rng(20240607);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  std::uniform_real_distribution<double> bias(0.0, 0.9);
  int deficient = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const std::size_t r = size(rng), c = size(rng);
    ExactMatrix m;
    if (trial % 3 == 0) {
      const std::size_t k = std::uniform_int_distribution<std::size_t>(0, std::min(r, c))(rng);
      m = random_low_rank(rng, r, c, k);
    } else {
      m = random_matrix(rng, r, c, bias(rng));
    }
    const std::size_t want = naive_rank(m);
    if (want < std::min(r, c)) ++deficient;
    ASSERT_EQ(exact_rank(m), want) << "trial " << trial << " (" << r << "x" << c << ")";
  }
  // The sample must exercise rank deficiency, not only full rank.
  EXPECT_GT(deficient, 300);
}

TEST(ExactRank, EdgeShapes) {
  EXPECT_EQ(exact_rank(ExactMatrix()), 0u);
  EXPECT_EQ(exact_rank(ExactMatrix(0, 5)), 0u);
  EXPECT_EQ(exact_rank(ExactMatrix(4, 0)), 0u);
  EXPECT_EQ(exact_rank(ExactMatrix(3, 3)), 0u);
  EXPECT_EQ(exact_rank(ExactMatrix::identity(7)), 7u);
}

TEST(ExactRank, LargeEntriesStayExact) {
  // Rows differ by a tiny rational; floating point would call this rank 1.
  ExactMatrix m(2, 2);
  m(0, 0) = Gaussian(Rational(1, 1) + Rational(1, 1000000007));
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 1;
  EXPECT_EQ(exact_rank(m), 2u);
  m(0, 0) = 1;
  EXPECT_EQ(exact_rank(m), 1u);
}

TEST(RowBasis, SpansRowSpaceAndIsReduced) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const ExactMatrix m = random_low_rank(rng, 6, 7, static_cast<std::size_t>(trial % 5));
    const ExactMatrix b = row_basis(m);
    EXPECT_EQ(b.rows(), exact_rank(m));
    EXPECT_EQ(exact_rank(vconcat(m, b)), exact_rank(m));
    // Leading entries are 1 and their columns are otherwise zero.
    for (std::size_t r = 0; r < b.rows(); ++r) {
      std::size_t lead = 0;
      while (b(r, lead).is_zero()) ++lead;
      EXPECT_EQ(b(r, lead), Gaussian(1));
      for (std::size_t o = 0; o < b.rows(); ++o) {
        if (o != r) EXPECT_TRUE(b(o, lead).is_zero());
      }
    }
  }
}

TEST(Determinant, MatchesRankAndMultiplies) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    const ExactMatrix a = random_matrix(rng, n, n, 0.3);
    const ExactMatrix b = random_matrix(rng, n, n, 0.3);
    EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
    EXPECT_EQ(determinant(a).is_zero(), naive_rank(a) < n);
  }
  ExactMatrix m(2, 2);
  m(0, 0) = Gaussian::i();
  m(0, 1) = 2;
  m(1, 0) = 3;
  m(1, 1) = Gaussian::i();
  EXPECT_EQ(determinant(m), Gaussian(-7));
}

TEST(Concat, ShapesAndErrors) {
  const ExactMatrix a(2, 3), b(2, 1), c(4, 3);
  EXPECT_EQ(hconcat(a, b).cols(), 4u);
  EXPECT_EQ(vconcat(a, c).rows(), 6u);
  EXPECT_THROW(hconcat(a, c), DimensionError);
  EXPECT_THROW(vconcat(a, b), DimensionError);
  EXPECT_THROW(a * c, DimensionError);
}
