#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polylab/int_matrix.hpp"
#include "polylab/int_poly.hpp"

namespace polylab {

/// (master seed, stream index). The same pair always produces the same
/// sample; distinct indices give unrelated streams.
struct SeedStream {
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
};

/// xoshiro256** keyed from a SeedStream through the splitmix64 finalizer:
///   key = mix(seed ^ mix(index + 0x9E3779B97F4A7C15)), state[i] = splitmix64 stream from key.
/// Everything downstream is integer arithmetic or an IEEE comparison, so
/// samples are identical on every platform.
class Rng {
 public:
  explicit Rng(SeedStream stream);

  std::uint64_t next_u64();
  /// Uniform on [0, bound), unbiased (Lemire's multiply-and-reject).
  std::uint64_t uniform_below(std::uint64_t bound);
  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();
  bool bernoulli(double p) { return uniform01() < p; }
  int sign() { return (next_u64() >> 63) ? 1 : -1; }

 private:
  std::uint64_t s_[4];
};

struct RademacherPoly { int n; };
struct UniformPoly { int n; std::uint64_t N; };
struct ZeroOneKonyagin { int n; };
struct IidSignMatrix { int n; };
/// Symmetric integer matrix, entries on and above the diagonal iid on
/// [-B, B]. `weights`, if given, has 2B+1 entries for values -B..B; otherwise
/// uniform on [-B, B] minus {0} when mean_zero, uniform on [-B, B] if not.
struct SymmetricBounded {
  int n;
  int B;
  bool mean_zero = true;
  std::optional<std::vector<std::uint64_t>> weights;
};
struct Elliptical { int n; double rho; };
struct ProductSigns { int n; int m; };
struct ErdosRenyi { int n; double p; };
struct DirectedBernoulli { int n; double p; };
struct FixedOutdegree { int n; int s; };
struct PermutationMatrix { int n; };

using EnsembleSpec = std::variant<RademacherPoly, UniformPoly, ZeroOneKonyagin, IidSignMatrix, SymmetricBounded,
                                  Elliptical, ProductSigns, ErdosRenyi, DirectedBernoulli, FixedOutdegree,
                                  PermutationMatrix>;

using Sample = std::variant<IntPoly, IntMatrix>;

std::string model_name(const EnsembleSpec& spec);
int spec_dimension(const EnsembleSpec& spec);
bool is_matrix_model(const EnsembleSpec& spec);

/// Throws InvalidArgument on out-of-range parameters.
void validate(const EnsembleSpec& spec);

/// Variance of one SymmetricBounded entry under its distribution.
double entry_variance(const SymmetricBounded& spec);

Sample sample(const EnsembleSpec& spec, SeedStream stream);

/// Polynomial models return the sample itself; matrix models its exact
/// characteristic polynomial.
IntPoly sample_polynomial(const EnsembleSpec& spec, SeedStream stream);

/// Throws InvalidArgument for polynomial-valued specs.
IntPoly charpoly_of_sample(const EnsembleSpec& spec, SeedStream stream);

}  // namespace polylab
