#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "polylab/error.hpp"
#include "polylab/int_matrix.hpp"

using namespace polylab;

namespace {

IntMatrix random_matrix(std::size_t n, int lo, int hi, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(gen);
  return m;
}

}  // namespace

TEST(IntMatrix, DeterminantMatchesLaplaceExpansion) {
  std::mt19937_64 gen(1);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int t = 0; t < 20; ++t) {
      const IntMatrix m = random_matrix(n, -9, 9, gen);
      EXPECT_EQ(mat_det_exact(m), oracle::det_laplace(oracle::rows(m))) << "n=" << n;
    }
  }
}

TEST(IntMatrix, DeterminantHandlesZeroPivots) {
  const IntMatrix m = IntMatrix::from_rows({{0, 1, 2}, {0, 3, 4}, {5, 6, 7}});
  EXPECT_EQ(mat_det_exact(m), BigInt(-10));
  EXPECT_EQ(mat_det_exact(IntMatrix::from_rows({{1, 2}, {2, 4}})), 0);
}

TEST(IntMatrix, CharpolyMatchesFaddeevLeVerrier) {
  std::mt19937_64 gen(2);
  for (std::size_t n = 1; n <= 9; ++n) {
    for (int t = 0; t < 10; ++t) {
      const IntMatrix m = random_matrix(n, -5, 5, gen);
      EXPECT_EQ(mat_charpoly_exact(m), oracle::charpoly_faddeev(m)) << "n=" << n;
    }
  }
}

TEST(IntMatrix, CharpolySatisfiesCayleyHamilton) {
  std::mt19937_64 gen(3);
  const IntMatrix a = random_matrix(6, -3, 3, gen);
  const IntPoly f = mat_charpoly_exact(a);
  IntMatrix acc(6);
  for (int i = f.degree(); i >= 0; --i) {
    acc = acc * a;
    for (std::size_t d = 0; d < 6; ++d) acc(d, d) += f.coeff(static_cast<std::size_t>(i));
  }
  EXPECT_EQ(acc, IntMatrix(6));
}

TEST(IntMatrix, CharpolyOfKnownMatrices) {
  // path on three vertices: z^3 - 2z
  const IntMatrix p3 = IntMatrix::from_rows({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  EXPECT_EQ(mat_charpoly_exact(p3), (IntPoly{0, -2, 0, 1}));
  EXPECT_EQ(mat_charpoly_exact(IntMatrix::identity(3)), (IntPoly{-1, 3, -3, 1}));
}

TEST(IntMatrix, RankMatchesRationalElimination) {
  std::mt19937_64 gen(4);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 6;
    IntMatrix m = random_matrix(n, -2, 2, gen);
    if (t % 3 == 0 && n > 1) {
      for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j) * 2 - m(1 % n, j);
    }
    const auto rows = oracle::rows(m);
    EXPECT_EQ(rank_exact(rows), oracle::rank_rational(rows));
  }
}

TEST(IntMatrix, ConstructionChecksShape) {
  EXPECT_THROW(IntMatrix(2, std::vector<BigInt>(3)), InvalidArgument);
  EXPECT_TRUE(IntMatrix::from_rows({{1, 2}, {2, 5}}).is_symmetric());
  EXPECT_FALSE(IntMatrix::from_rows({{1, 2}, {3, 5}}).is_symmetric());
}

TEST(IntMatrix, EigenvalueBound) {
  const IntMatrix m = IntMatrix::from_rows({{1, -1, 1}, {1, 1, -1}, {-1, 1, 1}});
  EXPECT_EQ(matrix_eigenvalue_bound(m), 3);
}
