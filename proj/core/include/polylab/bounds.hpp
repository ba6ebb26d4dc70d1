#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polylab/int_poly.hpp"

namespace polylab {

/// One named quantity: natural log always, exact rational value when the
/// quantity is rational.
struct BoundValue {
  std::string name;
  double log_value;
  std::optional<BigRational> exact;
};

/// lhs <= rhs, compared in 50-digit log space (or exactly when both sides
/// are rational).
struct BoundCheck {
  std::string name;
  double log_lhs;
  double log_rhs;
  bool holds;
};

struct BoundReport {
  std::vector<BoundValue> values;
  std::vector<BoundCheck> checks;

  bool all_hold() const;
};

/// prod_{j=1..k} (2 C(k,j) M^j + 1), exactly.
BigRational product_bound(int k, const BigRational& M);
/// The same product evaluated independently in double log space.
double log_product_bound(int k, double M);

/// sum_{l=1..k} l prod_{j=1..l} (2 C(l,j) M^j + 1), exactly.
BigRational sum_bound(int k, const BigRational& M);

/// For k >= 2: M^((k^2+k)/2) e^((k^2 - k ln k)/2) <= product <= (eM)^((k^2+k)/2)
/// and sum <= (eM)^(k^2). For k = 1: 2M+1 <= 3M.
BoundReport candidate_count_sandwich(int k, const BigRational& M);

/// p (eM)^(k^2) + tail for k >= 2, 3Mp + tail for k = 1, clamped to 1.
double low_degree_root_budget(double p, double M, int k, double tail);

enum class CollectedCase { I, II, III, IV };

struct CollectedParams {
  double p_scale = 1.0;  // (i): p = p_scale / sqrt(n)
  double eps = 0.25;     // (ii): k = floor(n^(1/2 - eps))
  double c = 0.5;        // (iii): p = 2 exp(-n^c)
  double c_prime = 0.2;  // (iii): k = floor(n^c'), c' < c/2
  double C = 1.0;        // (iii): M = C sqrt(n)
  double B = 1.0;        // (iv): target n^-B
  double m = 1.0;        // (iv): M = n^m
  int K = 2;             // (iv): k = K
  std::optional<double> B_prime;  // (iv): default B + 2 m K^2
};

struct CollectedResult {
  CollectedCase which;
  double n;
  int k;
  double log_value;  // log of p (eM)^(k^2)
  double log_limit;  // log of the case's right-hand side
  bool holds;
  // Smallest n on the grid 8 * 2^i from which the predicate holds at that
  // point and the next ten grid points (cases iii and iv).
  std::optional<double> threshold;
};

/// Evaluates one case of the collected p (eM)^(k^2) bounds at a concrete n.
/// Throws InvalidArgument on inconsistent parameters.
CollectedResult collected_bounds_check(CollectedCase which, const CollectedParams& params, double n);

/// (1/n) sum_{d | n} mu(d) q^(n/d). Throws InvalidArgument unless q is a
/// prime power and n >= 1.
BigInt ff_irreducible_count(std::uint64_t q, std::uint64_t n);

/// P(f_n(x) = 0) for x = +-1 and a monic degree-n polynomial with iid
/// Rademacher coefficients: C(n, (n-1)/2) / 2^n for odd n, 0 for even n.
BigRational lo_exact_pm1(int n, int x);

/// 2 sqrt(2 / (pi (n+1))) - 4 / (pi (n+1)), odd n only.
double odd_degree_reducibility_lower_bound(int n);

double log_of(const BigRational& q);

}  // namespace polylab
