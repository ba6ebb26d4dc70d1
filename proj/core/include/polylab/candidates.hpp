#pragma once

#include <optional>
#include <vector>

#include "polylab/int_poly.hpp"

namespace polylab {

inline const BigInt kDefaultCandidateCeiling = 100'000'000;

/// Integer coefficient box for monic degree-k polynomials whose roots all
/// lie in |z| <= M: |c_{k-j}| <= floor(C(k,j) M^j) for j = 1..k.
struct CandidateBox {
  int k = 0;
  BigRational M;
  std::vector<BigInt> per_degree_bounds;  // entry j-1 bounds |c_{k-j}|

  static CandidateBox make(int k, const BigRational& M);

  /// Bound on |c_i|, 0 <= i < k.
  const BigInt& coefficient_bound(int i) const { return per_degree_bounds[static_cast<std::size_t>(k - i - 1)]; }

  /// prod_j (2 floor(C(k,j) M^j) + 1)
  BigInt cardinality() const;
};

BigInt binomial(unsigned n, unsigned k);

/// Odometer over every monic polynomial in a CandidateBox. An optional
/// whitelist restricts the constant coefficient.
class CandidateStream {
 public:
  CandidateStream(CandidateBox box, std::optional<std::vector<BigInt>> constant_terms = std::nullopt);

  std::optional<IntPoly> next();
  const CandidateBox& box() const { return box_; }
  /// Number of polynomials the stream yields in total.
  BigInt predicted_count() const;

 private:
  CandidateBox box_;
  std::optional<std::vector<BigInt>> constant_terms_;
  std::vector<BigInt> current_;     // c_0..c_{k-1}
  std::size_t constant_index_ = 0;  // into constant_terms_ when present
  bool exhausted_ = false;
  bool started_ = false;
};

/// Stream of all monic degree-k candidates for root bound M; throws
/// CeilingExceeded when the box holds more than `ceiling` polynomials.
CandidateStream enumerate_candidates(int k, const BigRational& M,
                                     const BigInt& ceiling = kDefaultCandidateCeiling);

}  // namespace polylab
