#include "polylab/bounds.hpp"

#include <cmath>
#include <numbers>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "polylab/candidates.hpp"
#include "polylab/error.hpp"
#include "polylab/number_theory.hpp"

namespace polylab {

namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;

Float50 log50(const BigRational& q) {
  return log(Float50(numerator(q))) - log(Float50(denominator(q)));
}

BoundCheck compare_log(std::string name, const Float50& lhs, const Float50& rhs) {
  return {std::move(name), lhs.convert_to<double>(), rhs.convert_to<double>(), lhs <= rhs};
}

}  // namespace

bool BoundReport::all_hold() const {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return true;
}

double log_of(const BigRational& q) { return log50(q).convert_to<double>(); }

BigRational product_bound(int k, const BigRational& M) {
  if (k < 1) throw InvalidArgument("k must be >= 1");
  if (M < 1) throw InvalidArgument("M must be >= 1");
  BigRational prod = 1;
  BigRational power = 1;
  for (int j = 1; j <= k; ++j) {
    power *= M;
    prod *= 2 * BigRational(binomial(k, j)) * power + 1;
  }
  return prod;
}

double log_product_bound(int k, double M) {
  double s = 0.0;
  const double lm = std::log(M);
  for (int j = 1; j <= k; ++j) {
    const double a = std::lgamma(k + 1.0) - std::lgamma(j + 1.0) - std::lgamma(k - j + 1.0) + j * lm;
    s += a + std::log(2.0) + std::log1p(std::exp(-a) / 2.0);
  }
  return s;
}

BigRational sum_bound(int k, const BigRational& M) {
  BigRational s = 0;
  for (int l = 1; l <= k; ++l) s += l * product_bound(l, M);
  return s;
}

BoundReport candidate_count_sandwich(int k, const BigRational& M) {
  BoundReport r;
  const BigRational prod = product_bound(k, M);
  r.values.push_back({"product", log_product_bound(k, M.convert_to<double>()), prod});
  if (k == 1) {
    const BigRational three_m = 3 * M;
    r.values.push_back({"3M", log_of(three_m), three_m});
    r.checks.push_back({"product <= 3M", log_of(prod), log_of(three_m), prod <= three_m});
    return r;
  }
  const BigRational sum = sum_bound(k, M);
  r.values.push_back({"sum", log_of(sum), sum});

  const Float50 lm = log50(M);
  const Float50 kk = k;
  const Float50 half_tri = (kk * kk + kk) / 2;
  const Float50 lower = half_tri * lm + (kk * kk - kk * log(kk)) / 2;
  const Float50 upper = half_tri * (1 + lm);
  const Float50 sum_upper = kk * kk * (1 + lm);
  r.values.push_back({"lower", lower.convert_to<double>(), std::nullopt});
  r.values.push_back({"(eM)^((k^2+k)/2)", upper.convert_to<double>(), std::nullopt});
  r.values.push_back({"(eM)^(k^2)", sum_upper.convert_to<double>(), std::nullopt});

  const Float50 lprod = log50(prod);
  r.checks.push_back(compare_log("lower <= product", lower, lprod));
  r.checks.push_back(compare_log("product <= (eM)^((k^2+k)/2)", lprod, upper));
  r.checks.push_back(compare_log("sum <= (eM)^(k^2)", log50(sum), sum_upper));
  return r;
}

double low_degree_root_budget(double p, double M, int k, double tail) {
  if (!(p >= 0.0 && p <= 1.0) || !(tail >= 0.0 && tail <= 1.0)) throw InvalidArgument("p and tail must lie in [0, 1]");
  if (!(M >= 1.0)) throw InvalidArgument("M must be >= 1");
  if (k < 1) throw InvalidArgument("k must be >= 1");
  double main = 0.0;
  if (p > 0.0) {
    const double log_main = (k == 1) ? std::log(3.0 * M) + std::log(p)
                                     : std::log(p) + static_cast<double>(k) * k * (1.0 + std::log(M));
    main = log_main > 0.0 ? 1.0 : std::exp(log_main);
  }
  return std::min(1.0, main + tail);
}

namespace {

struct CaseEval {
  int k;
  double log_value;
  double log_limit;
};

CaseEval evaluate_case(CollectedCase which, const CollectedParams& p, double n) {
  const double ln = std::log(n);
  switch (which) {
    case CollectedCase::I: {
      const int k = static_cast<int>(std::floor(std::sqrt(ln / 4.0)));
      if (k < 1) throw InvalidArgument("case (i) needs ln n >= 4 so that k >= 1");
      const double lp = std::log(p.p_scale) - 0.5 * ln;
      // envelope: p_scale n^(-1/2) (2e)^(ln n / 4), which tends to zero
      return {k, lp + k * k * (1.0 + std::log(2.0)), lp + (ln / 4.0) * (1.0 + std::log(2.0))};
    }
    case CollectedCase::II: {
      const int k = std::max(1, static_cast<int>(std::floor(std::pow(n, 0.5 - p.eps))));
      const double lp = -0.5 * n * std::log(2.0);
      return {k, lp + static_cast<double>(k) * k * (1.0 + ln), lp + std::pow(n, 1.0 - 2.0 * p.eps) * (1.0 + ln)};
    }
    case CollectedCase::III: {
      const int k = std::max(1, static_cast<int>(std::floor(std::pow(n, p.c_prime))));
      const double nc = std::pow(n, p.c);
      const double lp = std::log(2.0) - nc;
      const double lm = std::log(p.C) + 0.5 * ln;
      return {k, lp + static_cast<double>(k) * k * (1.0 + lm), std::log(2.0) - (2.0 / 3.0) * nc};
    }
    case CollectedCase::IV: {
      const double bp = p.B_prime ? *p.B_prime : p.B + 2.0 * p.m * p.K * p.K;
      return {p.K, -bp * ln + static_cast<double>(p.K) * p.K * (1.0 + p.m * ln), -p.B * ln};
    }
  }
  throw InvalidArgument("unknown case");
}

}  // namespace

CollectedResult collected_bounds_check(CollectedCase which, const CollectedParams& params, double n) {
  if (!(n >= 2.0)) throw InvalidArgument("n must be >= 2");
  switch (which) {
    case CollectedCase::I:
      if (!(params.p_scale > 0)) throw InvalidArgument("case (i) needs p_scale > 0");
      break;
    case CollectedCase::II:
      if (!(params.eps > 0 && params.eps < 0.5)) throw InvalidArgument("case (ii) needs 0 < eps < 1/2");
      break;
    case CollectedCase::III:
      if (!(params.c > 0 && params.c < 1)) throw InvalidArgument("case (iii) needs 0 < c < 1");
      if (!(params.c_prime > 0 && params.c_prime < params.c / 2)) throw InvalidArgument("case (iii) needs 0 < c' < c/2");
      if (!(params.C > 0)) throw InvalidArgument("case (iii) needs C > 0");
      break;
    case CollectedCase::IV:
      if (!(params.B > 0) || !(params.m >= 1) || params.K < 1) throw InvalidArgument("case (iv) needs B > 0, m >= 1, K >= 1");
      break;
  }
  const CaseEval e = evaluate_case(which, params, n);
  CollectedResult r{which, n, e.k, e.log_value, e.log_limit, e.log_value <= e.log_limit, std::nullopt};

  if (which == CollectedCase::III || which == CollectedCase::IV) {
    auto holds_at = [&](double x) {
      const CaseEval v = evaluate_case(which, params, x);
      return v.log_value <= v.log_limit;
    };
    for (double x = 8.0; x < 1e300; x *= 2.0) {
      if (!holds_at(x)) continue;
      bool stable = true;
      double y = x;
      for (int i = 0; i < 10 && stable; ++i) {
        y *= 2.0;
        stable = holds_at(y);
      }
      if (stable) {
        r.threshold = x;
        break;
      }
    }
  }
  return r;
}

BigInt ff_irreducible_count(std::uint64_t q, std::uint64_t n) {
  if (!as_prime_power(q)) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  if (n < 1) throw InvalidArgument("degree must be >= 1");
  BigInt total = 0;
  for (std::uint64_t d : divisors(n)) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    total += mu * boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n / d));
  }
  return total / n;
}

BigRational lo_exact_pm1(int n, int x) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (x != 1 && x != -1) throw InvalidArgument("x must be +1 or -1");
  if (n % 2 == 0) return 0;
  return BigRational(binomial(static_cast<unsigned>(n), static_cast<unsigned>((n - 1) / 2)),
                     BigInt(1) << n);
}

double odd_degree_reducibility_lower_bound(int n) {
  if (n < 1 || n % 2 == 0) throw InvalidArgument("the reducibility lower bound is defined for odd n");
  const double t = std::numbers::pi * (n + 1);
  return 2.0 * std::sqrt(2.0 / t) - 4.0 / t;
}

}  // namespace polylab
