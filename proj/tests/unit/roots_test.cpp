#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "polylab/error.hpp"
#include "polylab/experiments.hpp"
#include "polylab/roots.hpp"

using namespace polylab;

namespace {

bool has_root_near(const RootSet& rs, Complex z, double tol) {
  return std::any_of(rs.roots.begin(), rs.roots.end(), [&](Complex r) { return std::abs(r - z) < tol; });
}

}  // namespace

TEST(Roots, SimpleIntegerRoots) {
  const IntPoly f{-6, 11, -6, 1};  // (z-1)(z-2)(z-3)
  const RootSet rs = find_roots(f);
  ASSERT_TRUE(rs.converged);
  for (double r : {1.0, 2.0, 3.0}) EXPECT_TRUE(has_root_near(rs, r, 1e-10));
}

TEST(Roots, ComplexPairs) {
  const RootSet rs = find_roots(IntPoly{1, 0, 1});
  ASSERT_TRUE(rs.converged);
  EXPECT_TRUE(has_root_near(rs, Complex(0, 1), 1e-12));
  EXPECT_TRUE(has_root_near(rs, Complex(0, -1), 1e-12));
}

TEST(Roots, RepeatedRootsAreFlaggedButConverge) {
  const IntPoly f = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{2, 0, 1};
  RootSet rs = find_roots(f);
  ASSERT_TRUE(rs.converged);
  EXPECT_TRUE(rs.clustered);
  EXPECT_TRUE(has_root_near(rs, 1.0, 1e-4));
}

TEST(Roots, ExactZeroRootsAreDeflated) {
  const IntPoly f{0, 0, 0, -8, 0, 0, 1};  // z^6 - 8 z^3
  const RootSet rs = find_roots(f);
  ASSERT_TRUE(rs.converged);
  EXPECT_EQ(std::count(rs.roots.begin(), rs.roots.end(), Complex(0.0)), 3);
  EXPECT_TRUE(has_root_near(rs, 2.0, 1e-10));
}

TEST(Roots, ReconstructsCoefficients) {
  std::mt19937_64 gen(9);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 30; ++t) {
    std::vector<BigInt> c(9);
    for (int i = 0; i < 8; ++i) c[static_cast<std::size_t>(i)] = d(gen);
    c[8] = 1;
    const IntPoly f(c);
    const RootSet rs = find_roots(f);
    ASSERT_TRUE(rs.converged);
    const auto back = poly_from_roots(rs.roots);
    for (std::size_t i = 0; i < back.size(); ++i) {
      EXPECT_NEAR(back[i].real(), f.coeff(i).convert_to<double>(), 1e-6);
      EXPECT_NEAR(back[i].imag(), 0.0, 1e-6);
    }
  }
}

TEST(Roots, RefinementKeepsAccurateRoots) {
  const IntPoly f{-2, 0, 1};
  RootSet rs = refine_roots(f, find_roots(f));
  EXPECT_TRUE(rs.converged);
  EXPECT_TRUE(has_root_near(rs, std::sqrt(2.0), 1e-15));
}

TEST(Roots, MaxModulusRespectsCauchyBound) {
  std::mt19937_64 gen(10);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int t = 0; t < 50; ++t) {
    std::vector<BigInt> c(8);
    for (int i = 0; i < 7; ++i) c[static_cast<std::size_t>(i)] = d(gen);
    c[7] = 1;
    const IntPoly f(c);
    const auto m = max_root_modulus(f);
    ASSERT_TRUE(m);
    EXPECT_LT(*m, cauchy_root_bound(f).convert_to<double>());
  }
}

TEST(Roots, AnnulusForEveryDegreeEightPlusMinusOnePolynomial) {
  for (std::uint64_t bits = 0; bits < 256; ++bits) {
    EXPECT_TRUE(annulus_check(rademacher_poly_from_bits(8, bits))) << bits;
  }
  EXPECT_THROW(annulus_check(IntPoly{2, 1}), InvalidArgument);
}

TEST(Roots, RejectsConstants) {
  EXPECT_THROW(find_roots(IntPoly{3}), InvalidArgument);
  EXPECT_THROW(find_roots(IntPoly()), InvalidArgument);
}
