// Acceptance suite: one line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "../oracles.hpp"
#include "polylab/bounds.hpp"
#include "polylab/candidates.hpp"
#include "polylab/controllability.hpp"
#include "polylab/ensembles.hpp"
#include "polylab/experiments.hpp"
#include "polylab/factor_search.hpp"
#include "polylab/int_matrix.hpp"
#include "polylab/roots.hpp"
#include "polylab_cli/cli.hpp"

using namespace polylab;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string cli_out(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  polylab::cli::run(args, out, err);
  return out.str();
}

// Outcome for a batch of checks: counts failures and keeps the first message.
struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first = what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failed == 0) return {true, summary};
    return {false, std::to_string(failed) + "/" + std::to_string(checked) + " failed, first: " + first};
  }
};

// ---- 1 ----
Outcome finite_field_count() {
  Tally t;
  for (int q : {2, 3})
    for (int n = 1; n <= 6; ++n) {
      const auto brute = oracle::count_irreducible_bruteforce(q, n);
      t.check(ff_irreducible_count(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(n)) == brute,
              "q=" + std::to_string(q) + " n=" + std::to_string(n));
    }
  t.check(cli_out({"--seed", "0", "ffcount", "--q", "2", "--n", "4"}) == "3\n", "ffcount q=2 n=4");
  t.check(cli_out({"--seed", "0", "ffcount", "--q", "3", "--n", "3"}) == "8\n", "ffcount q=3 n=3");
  return t.outcome("12 (q, n) pairs match trial division; (2,4) -> 3, (3,3) -> 8");
}

// ---- 2 ----
// Reducible iff some monic integer polynomial of degree <= n/2 with roots in
// |z| < 2 divides f, decided by schoolbook long division in machine integers.
bool reducible_by_trial_division(const std::vector<long long>& f) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= n / 2; ++d) {
    std::vector<long long> bound(static_cast<std::size_t>(d));
    for (int j = 1; j <= d; ++j) {
      long long b = 1;
      for (int i = 0; i < j; ++i) b = b * (d - i) / (i + 1);
      bound[static_cast<std::size_t>(d - j)] = b << j;  // |c_{d-j}| <= C(d,j) 2^j
    }
    std::vector<long long> g(static_cast<std::size_t>(d) + 1, 0);
    g[static_cast<std::size_t>(d)] = 1;
    for (int i = 0; i < d; ++i) g[static_cast<std::size_t>(i)] = -bound[static_cast<std::size_t>(i)];
    while (true) {
      if (g[0] == 1 || g[0] == -1) {
        std::vector<long long> r = f;
        for (int top = n; top >= d; --top) {
          const long long q = r[static_cast<std::size_t>(top)];
          for (int i = 0; i <= d; ++i) r[static_cast<std::size_t>(top - d + i)] -= q * g[static_cast<std::size_t>(i)];
        }
        if (std::all_of(r.begin(), r.end(), [](long long v) { return v == 0; })) return true;
      }
      int i = 0;
      while (i < d && g[static_cast<std::size_t>(i)] == bound[static_cast<std::size_t>(i)]) {
        g[static_cast<std::size_t>(i)] = -bound[static_cast<std::size_t>(i)];
        ++i;
      }
      if (i == d) break;
      ++g[static_cast<std::size_t>(i)];
    }
  }
  return false;
}

Outcome rademacher_census() {
  Tally t;
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t oracle_count = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      std::vector<long long> f(static_cast<std::size_t>(n) + 1, 1);
      for (int i = 0; i < n; ++i) f[static_cast<std::size_t>(i)] = (bits >> i & 1) ? -1 : 1;
      oracle_count += reducible_by_trial_division(f);
    }
    const auto c = exhaustive_reducibility(n);
    t.check(c.reducible == oracle_count, "n=" + std::to_string(n) + " disagrees with trial division");
  }
  t.check(exhaustive_reducibility(2).probability == 0, "n=2 not 0");
  t.check(exhaustive_reducibility(4).probability == 0, "n=4 not 0");
  t.check(exhaustive_reducibility(3).probability == BigRational(1, 2), "n=3 not 1/2");
  for (int n = 1; n <= 12; ++n) {
    const auto c = exhaustive_reducibility(n);
    t.check(c.unknown == 0, "n=" + std::to_string(n) + " left unsettled polynomials");
    // exact inclusion-exclusion for roots at +-1
    std::uint64_t both = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const IntPoly f = rademacher_poly_from_bits(n, bits);
      both += poly_eval_int(f, 1) == 0 && poly_eval_int(f, -1) == 0;
    }
    const BigRational pm1 = lo_exact_pm1(n, 1) + lo_exact_pm1(n, -1) - BigRational(both, c.total);
    t.check(c.pm1_root_probability == pm1, "n=" + std::to_string(n) + " P(f(+-1)=0) mismatch");
    // a linear polynomial with a root is still irreducible
    if (n >= 2) t.check(c.probability >= pm1, "n=" + std::to_string(n) + " below P(f(+-1)=0)");
  }
  return t.outcome("n=2,4 -> 0, n=3 -> 1/2, n<=6 match trial division, n<=12 dominate P(f(+-1)=0)");
}

// ---- 3 ----
Outcome annulus() {
  Tally t;
  for (std::uint64_t bits = 0; bits < 4096; ++bits)
    t.check(annulus_check(rademacher_poly_from_bits(12, bits)), "bits=" + std::to_string(bits));
  return t.outcome("4096 degree-12 polynomials, all roots in [0.5+1e-6, 2-1e-6]");
}

// ---- 4 ----
Outcome sandwich() {
  Tally t;
  for (int k = 2; k <= 12; ++k)
    for (int M : {1, 2, 5, 10}) {
      const BoundReport r = candidate_count_sandwich(k, M);
      bool ok = r.checks.size() == 3;
      for (const auto& c : r.checks) ok = ok && c.holds;
      t.check(ok, "k=" + std::to_string(k) + " M=" + std::to_string(M));
    }
  for (int M : {1, 2, 5, 10}) {
    t.check(product_bound(1, M) == 2 * M + 1 && 2 * M + 1 <= 3 * M, "k=1 M=" + std::to_string(M));
    t.check(candidate_count_sandwich(1, M).all_hold(), "k=1 report M=" + std::to_string(M));
  }
  return t.outcome("44 (k, M) cases, both sides, plus 2M+1 <= 3M");
}

// ---- 5 ----
Outcome cardinality() {
  Tally t;
  for (auto [k, M] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
    BigInt expected = 1;
    for (int j = 1; j <= k; ++j) {
      BigInt b = binomial(static_cast<unsigned>(k), static_cast<unsigned>(j));
      for (int e = 0; e < j; ++e) b *= M;
      expected *= 2 * b + 1;
    }
    CandidateStream s = enumerate_candidates(k, M);
    BigInt n = 0;
    while (s.next()) ++n;
    t.check(n == expected, "(k, M)=(" + std::to_string(k) + ", " + std::to_string(M) + ") counted " + n.str() +
                               " expected " + expected.str());
  }
  return t.outcome("4 boxes, stream counts equal the product formula");
}

// ---- 6 ----
Outcome littlewood_offord() {
  const double exact = 462.0 / 2048.0;
  int covered = 0;
  for (std::uint64_t rep = 0; rep < 100; ++rep) {
    ExperimentConfig c;
    c.spec = RademacherPoly{11};
    c.statistic = IntegerPointRoot{1};
    c.trials = 100000;
    c.seed = 1000 + rep;
    const auto r = mc_estimate(c);
    covered += r.ci_lo <= exact && exact <= r.ci_hi;
  }
  return {covered >= 93, std::to_string(covered) + "/100 Wilson intervals cover 462/2048"};
}

// ---- 7 ----
double exact_singular_fraction(int n) {
  const int cells = n * n;
  std::uint64_t singular = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
    std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
    for (int i = 0; i < cells; ++i) a[static_cast<std::size_t>(i / n)][static_cast<std::size_t>(i % n)] = (bits >> i & 1) ? -1 : 1;
    singular += oracle::det_laplace(a) == 0;
  }
  return static_cast<double>(singular) / static_cast<double>(std::uint64_t{1} << cells);
}

Outcome singularity() {
  Tally t;
  std::ostringstream summary;
  for (int n : {2, 3}) {
    const double p = exact_singular_fraction(n);
    ExperimentConfig c;
    c.spec = IidSignMatrix{n};
    c.statistic = Singular{};
    c.trials = 100000;
    c.seed = 70 + static_cast<std::uint64_t>(n);
    const auto r = mc_estimate(c);
    const double sd = std::sqrt(p * (1 - p) / static_cast<double>(c.trials));
    t.check(std::abs(r.p_hat - p) <= 3 * sd, "n=" + std::to_string(n) + " p_hat " + std::to_string(r.p_hat));
    summary << (n == 3 ? ", " : "") << n << "x" << n << ": exact " << p << " p_hat " << r.p_hat;
  }
  if (exact_singular_fraction(2) != 0.5) t.check(false, "2x2 exhaustive count is not 1/2");
  return t.outcome(summary.str());
}

// ---- 8 ----
Outcome permutation_charpoly() {
  Tally t;
  std::size_t total = 0;
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      t.check(mat_charpoly_exact(oracle::permutation_matrix(perm)) == oracle::cycle_product(perm),
              "n=" + std::to_string(n));
      ++total;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return t.outcome(std::to_string(total) + " permutations, charpoly = prod (z^len - 1)");
}

// ---- 9 ----
Outcome root_budget() {
  struct Case {
    EnsembleSpec spec;
    int k;
    std::optional<RegionSpec> region;
  };
  const std::vector<Case> cases{
      {RademacherPoly{8}, 1, RegionSpec{2.0, {}, false}},
      {RademacherPoly{8}, 2, RegionSpec{2.0, {}, false}},
      {RademacherPoly{12}, 1, RegionSpec{2.0, {}, false}},
      {RademacherPoly{12}, 2, RegionSpec{2.0, {}, false}},
      {IidSignMatrix{6}, 1, RegionSpec{6.0, {}, false}},
      {IidSignMatrix{4}, 2, RegionSpec{4.0, {}, false}},
      {ErdosRenyi{6, 0.5}, 1, RegionSpec{6.0, {}, true}},
      {ErdosRenyi{6, 0.5}, 2, RegionSpec{5.0, {}, true}},
      {FixedOutdegree{6, 3}, 1, RegionSpec{6.0, {3}, false}},
      {FixedOutdegree{6, 2}, 1, RegionSpec{6.0, {2}, false}},
      {ZeroOneKonyagin{10}, 2, RegionSpec{2.0, {}, false}},
      {Elliptical{5, 0.5}, 1, RegionSpec{5.0, {}, false}},
  };
  Tally t;
  std::uint64_t seed = 900;
  for (const auto& c : cases) {
    ValidationConfig v;
    v.spec = c.spec;
    v.k = c.k;
    v.trials = 10000;
    v.seed = seed++;
    v.region = c.region;
    const auto r = validate_root_budget(v);
    std::ostringstream what;
    what << r.model << " n=" << r.n << " k=" << r.k << " empirical " << r.empirical << " budget " << r.budget;
    t.check(r.holds, what.str());
  }
  return t.outcome("12 configurations, 1e4 trials each, verdict holds");
}

// ---- 10 ----
Outcome controllability() {
  Tally t;
  const auto s = controllability_sweep(6, 0);
  t.check(s.graphs == 32768, "graph count");
  t.check(s.violations == 0, std::to_string(s.violations) + " violations");
  const ControllabilityCrossCheck p3 = controllability_cross_check(path_graph(3));
  t.check(!p3.controllable, "P3 reported controllable");
  t.check(p3.automorphisms && *p3.automorphisms == 2, "P3 automorphism count");
  std::ostringstream summary;
  summary << s.graphs << " graphs, " << s.violations << " violations, " << s.skipped << " skipped; P3 not controllable, "
          << (p3.automorphisms ? *p3.automorphisms : 0) << " automorphisms";
  return t.outcome(summary.str());
}

// ---- 11 ----
Outcome trivial_eigenvalue() {
  Tally t;
  for (auto [n, s] : std::vector<std::pair<int, int>>{{5, 2}, {8, 2}, {8, 4}}) {
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const IntPoly f = charpoly_of_sample(FixedOutdegree{n, s}, {110, i});
      t.check(poly_divides(IntPoly::linear(s), f), "n=" + std::to_string(n) + " s=" + std::to_string(s));
    }
  }
  return t.outcome("3000 samples over (5,2), (8,2), (8,4)");
}

// ---- 12 ----
std::set<IntPoly> factor_set(const FactorReport& r) {
  const auto v = r.factor_polys();
  return {v.begin(), v.end()};
}

Outcome cross_method() {
  Tally t;
  std::size_t reducible = 0;
  for (std::uint64_t bits = 0; bits < 1024; ++bits) {
    const IntPoly f = rademacher_poly_from_bits(10, bits);
    const FactorReport e = low_degree_factors_enumerate(f, 2, BigRational(2));
    const FactorReport s = low_degree_factors_subset(f, 2);
    t.check(e.status == s.status && factor_set(e) == factor_set(s), f.to_string());
    reducible += e.status == FactorStatus::Reducible;
  }
  return t.outcome("1024 polynomials agree (" + std::to_string(reducible) + " with a factor of degree <= 2)");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"finite-field irreducible count", finite_field_count},
      {"Rademacher reducibility census", rademacher_census},
      {"root annulus for +-1 polynomials", annulus},
      {"candidate-count sandwich", sandwich},
      {"candidate box cardinality", cardinality},
      {"point probability at z = 1", littlewood_offord},
      {"sign-matrix singularity", singularity},
      {"permutation characteristic polynomials", permutation_charpoly},
      {"low-degree root budget validation", root_budget},
      {"graph controllability consistency", controllability},
      {"trivial eigenvalue of fixed-outdegree digraphs", trivial_eigenvalue},
      {"enumerate vs subset factor search", cross_method},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("%s %2d %-48s %8.2fs  %s\n", o.pass ? "PASS" : "FAIL", index, name.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", index - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
