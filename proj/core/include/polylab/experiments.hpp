#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polylab/detail/parallel.hpp"
#include "polylab/ensembles.hpp"
#include "polylab/int_poly.hpp"
#include "polylab/roots.hpp"

namespace polylab {

/// Omega: the closed disk |z| <= M minus a finite set of integer points,
/// optionally intersected with the real line.
struct RegionSpec {
  double M = 2.0;
  std::vector<long long> excluded;
  bool real_only = false;

  void validate() const;
  bool contains(Complex z) const;
  bool contains_integer(const BigInt& r) const;
};

struct Reducible {};
struct HasFactorDegAtMost { int k; };
struct IntegerPointRoot { long long x; };
struct MinPolyDivides { IntPoly g; };
struct Singular {};
struct TrivialEigenvalueMultiplicityAtLeast2 {};

using Statistic = std::variant<Reducible, HasFactorDegAtMost, IntegerPointRoot, MinPolyDivides, Singular,
                               TrivialEigenvalueMultiplicityAtLeast2>;

std::string statistic_name(const Statistic& s);
/// The k column of a report: the degree parameter where one exists, else 0.
int statistic_k(const Statistic& s);

struct ExperimentConfig {
  EnsembleSpec spec;
  Statistic statistic;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  /// Restricts HasFactorDegAtMost to factors with a root in the region.
  std::optional<RegionSpec> region;
  unsigned workers = 0;  // 0: hardware concurrency
  /// Record wall time in `seconds`; off by default so reports stay
  /// byte-identical across runs.
  bool timing = false;
};

/// Throws InvalidArgument when trials == 0, the region is invalid, or the
/// statistic needs a matrix ensemble (Singular, trivial eigenvalue) that the
/// spec does not provide.
void validate(const ExperimentConfig& config);

struct WilsonInterval {
  double lo;
  double hi;
};

inline constexpr double kZ95 = 1.959963984540054;

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ95);

struct EstimateRecord {
  std::string model;
  int n = 0;
  std::string statistic;
  int k = 0;
  double M = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t unknown = 0;  // trials the factor search could not settle
  double p_hat = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  std::uint64_t seed = 0;
  double seconds = 0.0;
  bool shared = false;
};

EstimateRecord make_record(const ExperimentConfig& config, std::uint64_t successes, std::uint64_t unknown);

/// Number of worker threads actually used for `requested` (0 = hardware).
unsigned resolve_workers(unsigned requested);

/// Sample i of the run comes from SeedStream{seed, i}, so results do not
/// depend on the worker count.
EstimateRecord mc_estimate(const ExperimentConfig& config);

/// Evaluates a statistic on one sample; nullopt when the factor search could
/// not settle the event.
std::optional<bool> evaluate_statistic(const Statistic& statistic, const EnsembleSpec& spec, const Sample& s,
                                       const std::optional<RegionSpec>& region);

struct CensusResult {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t reducible = 0;
  std::uint64_t unknown = 0;
  BigRational probability;
  /// by_smallest_degree[d] = number of reducible polynomials whose smallest
  /// irreducible factor has degree d (index 0 unused).
  std::vector<std::uint64_t> by_smallest_degree;
  /// P(f(1) = 0 or f(-1) = 0), counted on the same enumeration.
  BigRational pm1_root_probability;
};

/// All 2^n monic degree-n polynomials with +-1 coefficients. Throws for
/// n < 1 or n > 14.
CensusResult exhaustive_reducibility(int n, unsigned workers = 0);

/// The 2^n polynomial of index `bits`: coefficient i is -1 when bit i is set.
IntPoly rademacher_poly_from_bits(int n, std::uint64_t bits);

struct CandidateFrequency {
  IntPoly g;
  std::uint64_t hits = 0;
  double p_hat = 0.0;
  WilsonInterval ci{0.0, 0.0};
};

struct DelocalizationProfile {
  std::string model;
  int n = 0;
  int k = 0;
  double M = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t unknown = 0;
  std::uint64_t candidates = 0;  // irreducible candidates in the box
  std::vector<CandidateFrequency> nonzero;  // candidates observed at least once
  std::optional<IntPoly> argmax;
  double p_hat = 0.0;
};

/// P(g | f) for every irreducible monic candidate g of degree <= k in the
/// coefficient box of radius M with a root in the region, on shared samples.
DelocalizationProfile delocalization_profile(const EnsembleSpec& spec, int k, double M, std::uint64_t trials,
                                             std::uint64_t seed, const std::optional<RegionSpec>& region = {},
                                             unsigned workers = 0);

struct ValidationReport {
  std::string model;
  int n = 0;
  int k = 0;
  double M = 0.0;
  bool cauchy_M = false;  // M is the maximum Cauchy bound over the samples
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t events = 0;  // samples with an algebraic root of degree <= k in Omega
  std::uint64_t unknown = 0;
  std::uint64_t tail_events = 0;
  double empirical = 0.0;
  double p_hat = 0.0;
  std::optional<IntPoly> argmax;
  double tail = 0.0;
  double budget = 0.0;
  bool holds = false;
};

struct ValidationConfig {
  EnsembleSpec spec;
  int k = 1;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  /// Omega. Without a region, M is the largest Cauchy bound seen over the
  /// samples (so the tail term is zero) and Omega is the full disk.
  std::optional<RegionSpec> region;
  unsigned workers = 0;
};

ValidationReport validate_root_budget(const ValidationConfig& config);

enum class ReportFormat { Csv, Json };

void write_report(const std::vector<EstimateRecord>& records, ReportFormat format, std::ostream& out);
/// Throws IoError naming the path when the file cannot be written.
void emit_report(const std::vector<EstimateRecord>& records, ReportFormat format, const std::string& path);

inline constexpr const char* kCsvHeader = "model,n,statistic,k,M,trials,successes,p_hat,ci_lo,ci_hi,seed,seconds";

}  // namespace polylab

