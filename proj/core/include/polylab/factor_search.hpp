#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polylab/candidates.hpp"
#include "polylab/int_poly.hpp"

namespace polylab {

enum class FactorMethod { Enumerate, Subset, Cyclotomic, RationalRoot };
enum class FactorStatus { Irreducible, Reducible, NoFactorUpTo, Unknown };

std::string to_string(FactorMethod m);
std::string to_string(FactorStatus s);

struct FoundFactor {
  IntPoly poly;  // monic, irreducible, exactly divides the input
  FactorMethod method;

  int degree() const { return poly.degree(); }
};

/// Outcome of a factor search. `k` is meaningful for NoFactorUpTo;
/// `certificate` names the evidence behind an Irreducible verdict.
struct FactorReport {
  FactorStatus status = FactorStatus::Unknown;
  int k = 0;
  std::vector<FoundFactor> factors;
  std::string certificate;

  std::vector<IntPoly> factor_polys() const;
};

/// Candidate search over the coefficient box for degrees 1..k. Complete for
/// factors whose roots all lie in |z| <= M (default: the Cauchy bound).
/// Candidates with h(0) not dividing f(0) are skipped when f(0) != 0.
FactorReport low_degree_factors_enumerate(const IntPoly& f, int k,
                                          const std::optional<BigRational>& M = std::nullopt,
                                          const BigInt& ceiling = kDefaultCandidateCeiling);

struct SubsetOptions {
  double window = 0.3;                     // distance to the nearest integer
  std::uint64_t max_subsets = 20'000'000;  // budget across all degrees
};

/// Root-subset reconstruction: for each d-subset of numeric roots the
/// elementary symmetric functions are rounded and every near-integral
/// candidate is confirmed by exact division. Degrees min_degree..k.
FactorReport low_degree_factors_subset(const IntPoly& f, int k, const SubsetOptions& options = {},
                                       int min_degree = 1);

/// z - r for every integer root r of monic f, ascending by r.
std::vector<IntPoly> rational_root_factors(const IntPoly& f);

/// Every irreducible factor of degree <= k. Integer roots and cyclotomic
/// factors are divided out exactly (with multiplicity) before the subset
/// search runs on the cofactor, so repeated roots of those kinds never reach
/// the numeric stage.
FactorReport low_degree_factors(const IntPoly& f, int k, const SubsetOptions& options = {});

struct ClassifyOptions {
  std::size_t num_primes = 25;
  SubsetOptions subset;
};

/// Structural certificate, rational roots, cyclotomic factors, mod-p
/// certificate, then subset search up to floor(deg/2). Irreducible only with
/// a certificate or a completed search; Reducible always carries a factor.
FactorReport classify_irreducibility(const IntPoly& f, const ClassifyOptions& options = {});

struct SmallestFactor {
  FactorStatus status;  // Irreducible, Reducible or Unknown
  int degree = 0;       // smallest irreducible factor degree when Reducible
};

/// Like classify_irreducibility, but for reducible input also pins down the
/// smallest degree of an irreducible factor.
SmallestFactor smallest_factor_degree(const IntPoly& f, const ClassifyOptions& options = {});

}  // namespace polylab
