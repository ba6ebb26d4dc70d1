#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "../oracles.hpp"
#include "polylab/bounds.hpp"
#include "polylab/candidates.hpp"
#include "polylab/error.hpp"

using namespace polylab;

TEST(Bounds, ProductAndSumExamples) {
  EXPECT_EQ(product_bound(1, 1), 3);
  EXPECT_EQ(product_bound(2, 1), 15);
  EXPECT_EQ(sum_bound(2, 1), 33);
  EXPECT_EQ(product_bound(2, BigRational(3, 2)), BigRational(7 * 11, 2));  // (2*2*1.5+1)(2*2.25+1)
  EXPECT_LE(log_of(sum_bound(3, 2)), 9.0 * (1.0 + std::log(2.0)));
  // the intermediate step 3M + 2(eM)^3 <= (eM)^4 at M = 1
  EXPECT_LE(3.0 + 2.0 * std::exp(3.0), std::exp(4.0));
}

TEST(Bounds, ProductEqualsCandidateCountAtIntegerM) {
  for (int k = 1; k <= 6; ++k)
    for (int M : {1, 2, 3}) EXPECT_EQ(BigRational(CandidateBox::make(k, M).cardinality()), product_bound(k, M));
}

TEST(Bounds, SandwichHoldsOnGrid) {
  for (int k = 2; k <= 12; ++k)
    for (int M : {1, 2, 5, 10}) {
      const BoundReport r = candidate_count_sandwich(k, M);
      EXPECT_TRUE(r.all_hold()) << k << "," << M;
      EXPECT_EQ(r.checks.size(), 3u);
      // independent double-precision evaluation of the two envelopes
      const double lp = std::log(product_bound(k, M).convert_to<double>());
      const double lower = (k * k + k) / 2.0 * std::log(M) + (k * k - k * std::log(k)) / 2.0;
      const double upper = (k * k + k) / 2.0 * (1.0 + std::log(M));
      EXPECT_LE(lower, lp);
      EXPECT_LE(lp, upper);
    }
  const BoundReport one = candidate_count_sandwich(1, 4);
  EXPECT_TRUE(one.all_hold());
  EXPECT_EQ(one.checks.size(), 1u);
}

TEST(Bounds, LowerEnvelopeExample) {
  const BoundReport r = candidate_count_sandwich(2, 1);
  EXPECT_NEAR(r.checks[0].log_lhs, (4.0 - 2.0 * std::log(2.0)) / 2.0, 1e-12);
  EXPECT_NEAR(std::exp(r.checks[0].log_lhs), 3.69, 0.005);
}

TEST(Bounds, LogAndExactPathsAgree) {
  for (int k = 1; k <= 12; ++k)
    for (int M : {1, 2, 5, 10}) {
      const double exact = log_of(product_bound(k, M));
      EXPECT_NEAR(log_product_bound(k, M), exact, 1e-9 * std::abs(exact)) << k << "," << M;
    }
}

TEST(Bounds, LowDegreeRootBudget) {
  EXPECT_EQ(low_degree_root_budget(0.0, 3.0, 4, 0.0), 0.0);
  EXPECT_NEAR(low_degree_root_budget(0.1, 2.0, 1, 0.0), 0.6, 1e-12);
  EXPECT_NEAR(low_degree_root_budget(1e-10, 1.0, 2, 0.25), 1e-10 * std::exp(4.0) + 0.25, 1e-15);
  EXPECT_EQ(low_degree_root_budget(0.5, 2.0, 3, 0.0), 1.0);
  EXPECT_THROW(low_degree_root_budget(1.5, 2.0, 1, 0.0), InvalidArgument);
  EXPECT_THROW(low_degree_root_budget(0.5, 0.5, 1, 0.0), InvalidArgument);
}

TEST(Bounds, CollectedCases) {
  CollectedParams p;
  p.B = 1;
  p.m = 1;
  p.K = 2;
  p.B_prime = 9;
  const auto iv = collected_bounds_check(CollectedCase::IV, p, 1e6);
  EXPECT_TRUE(iv.holds);
  EXPECT_NEAR(iv.log_value, -9 * std::log(1e6) + 4 * (1 + std::log(1e6)), 1e-9);

  CollectedParams q;
  q.c = 0.5;
  q.c_prime = 0.2;
  q.C = 1;
  const auto iii = collected_bounds_check(CollectedCase::III, q, 1e4);
  ASSERT_TRUE(iii.threshold);
  double x = *iii.threshold;
  for (int i = 0; i <= 10; ++i, x *= 2) EXPECT_TRUE(collected_bounds_check(CollectedCase::III, q, x).holds) << x;

  CollectedParams r;
  double prev = INFINITY;
  for (double ln : {16.0, 20.0, 30.0, 50.0, 80.0}) {
    const auto i = collected_bounds_check(CollectedCase::I, r, std::exp(ln));
    EXPECT_LT(i.log_value, 0.0);
    EXPECT_LE(i.log_value, prev + 1e-12);
    prev = i.log_value;
  }
  EXPECT_EQ(collected_bounds_check(CollectedCase::I, r, std::exp(16.0)).k, 2);
  EXPECT_THROW(collected_bounds_check(CollectedCase::I, r, 10.0), InvalidArgument);

  CollectedParams bad;
  bad.c = 0.4;
  bad.c_prime = 0.3;
  EXPECT_THROW(collected_bounds_check(CollectedCase::III, bad, 100.0), InvalidArgument);
}

TEST(Bounds, FiniteFieldCountExamples) {
  EXPECT_EQ(ff_irreducible_count(2, 1), 2);
  EXPECT_EQ(ff_irreducible_count(2, 4), 3);
  EXPECT_EQ(ff_irreducible_count(3, 3), 8);
  EXPECT_EQ(ff_irreducible_count(4, 2), 6);
  EXPECT_THROW(ff_irreducible_count(6, 2), InvalidArgument);
  EXPECT_THROW(ff_irreducible_count(2, 0), InvalidArgument);
}

TEST(Bounds, FiniteFieldCountMatchesBruteForce) {
  for (int q : {2, 3})
    for (int n = 1; n <= 6; ++n)
      EXPECT_EQ(ff_irreducible_count(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(n)),
                BigInt(oracle::count_irreducible_bruteforce(q, n)))
          << q << "," << n;
}

TEST(Bounds, FiniteFieldCountWindow) {
  for (std::uint64_t q : {2, 3, 4, 5})
    for (std::uint64_t n = 1; n <= 16; ++n) {
      const double qn = std::pow(static_cast<double>(q), static_cast<double>(n));
      const double ratio = ff_irreducible_count(q, n).convert_to<double>() / qn;
      EXPECT_LE(std::abs(ratio - 1.0 / static_cast<double>(n)), 2.0 / std::sqrt(qn)) << q << "," << n;
    }
}

TEST(Bounds, PointProbabilityAtPlusMinusOne) {
  // exhaustive over coefficient vectors of z^3 + a2 z^2 + a1 z + a0
  int zeros = 0;
  for (int bits = 0; bits < 8; ++bits) {
    int v = 1;
    for (int i = 0; i < 3; ++i) v += (bits >> i & 1) ? -1 : 1;
    zeros += v == 0;
  }
  EXPECT_EQ(lo_exact_pm1(3, 1), BigRational(zeros, 8));
  EXPECT_EQ(lo_exact_pm1(3, 1), BigRational(3, 8));
  EXPECT_EQ(lo_exact_pm1(4, 1), 0);
  EXPECT_EQ(lo_exact_pm1(11, 1), BigRational(462, 2048));
  EXPECT_EQ(lo_exact_pm1(11, -1), lo_exact_pm1(11, 1));
  EXPECT_THROW(lo_exact_pm1(5, 2), InvalidArgument);
  for (int n = 1; n <= 201; n += 2)
    EXPECT_LE(lo_exact_pm1(n, 1).convert_to<double>(), 1.1 * std::sqrt(2.0 / (std::numbers::pi * n))) << n;
}

TEST(Bounds, OddDegreeReducibilityLowerBound) {
  EXPECT_NEAR(odd_degree_reducibility_lower_bound(3), 2 * 0.39894228 - 0.31830989, 1e-7);
  EXPECT_NEAR(odd_degree_reducibility_lower_bound(21), 0.2823445951, 1e-9);
  EXPECT_NEAR(odd_degree_reducibility_lower_bound(21), 0.2824, 1e-4);
  double prev = 1.0;
  for (int n = 3; n <= 2001; n += 2) {
    const double v = odd_degree_reducibility_lower_bound(n);
    EXPECT_LT(v, prev);
    EXPECT_GT(v, 0.0);
    prev = v;
  }
  EXPECT_THROW(odd_degree_reducibility_lower_bound(4), InvalidArgument);
}
