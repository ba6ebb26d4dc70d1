#include "polylab/ensembles.hpp"

#include <numeric>

#include "polylab/error.hpp"

namespace polylab {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Rng::Rng(SeedStream stream) {
  std::uint64_t key = mix64(stream.seed ^ mix64(stream.index + kGolden));
  for (auto& s : s_) {
    key += kGolden;
    s = mix64(key);
  }
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("uniform_below(0)");
  unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next_u64()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double Rng::uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::string model_name(const EnsembleSpec& spec) {
  return std::visit(Overloaded{
                        [](const RademacherPoly&) { return "rademacher-poly"; },
                        [](const UniformPoly&) { return "uniform-poly"; },
                        [](const ZeroOneKonyagin&) { return "zero-one-konyagin"; },
                        [](const IidSignMatrix&) { return "iid-sign-matrix"; },
                        [](const SymmetricBounded&) { return "symmetric-bounded"; },
                        [](const Elliptical&) { return "elliptical"; },
                        [](const ProductSigns&) { return "product-signs"; },
                        [](const ErdosRenyi&) { return "erdos-renyi"; },
                        [](const DirectedBernoulli&) { return "directed-bernoulli"; },
                        [](const FixedOutdegree&) { return "fixed-outdegree"; },
                        [](const PermutationMatrix&) { return "permutation-matrix"; },
                    },
                    spec);
}

int spec_dimension(const EnsembleSpec& spec) {
  return std::visit([](const auto& s) { return s.n; }, spec);
}

bool is_matrix_model(const EnsembleSpec& spec) {
  return !std::holds_alternative<RademacherPoly>(spec) && !std::holds_alternative<UniformPoly>(spec) &&
         !std::holds_alternative<ZeroOneKonyagin>(spec);
}

void validate(const EnsembleSpec& spec) {
  const int n = spec_dimension(spec);
  if (n < 1) throw InvalidArgument(model_name(spec) + ": n must be >= 1");
  auto check_p = [&](double p) {
    if (!(p > 0.0 && p < 1.0)) throw InvalidArgument(model_name(spec) + ": p must lie in (0, 1)");
  };
  std::visit(Overloaded{
                 [](const RademacherPoly&) {},
                 [](const UniformPoly& s) {
                   if (s.N < 1) throw InvalidArgument("uniform-poly: N must be >= 1");
                 },
                 [](const ZeroOneKonyagin&) {},
                 [](const IidSignMatrix&) {},
                 [](const SymmetricBounded& s) {
                   if (s.B < 1) throw InvalidArgument("symmetric-bounded: B must be >= 1");
                   if (s.weights) {
                     if (s.weights->size() != static_cast<std::size_t>(2 * s.B + 1))
                       throw InvalidArgument("symmetric-bounded: weights need 2B+1 entries");
                     if (std::accumulate(s.weights->begin(), s.weights->end(), std::uint64_t{0}) == 0)
                       throw InvalidArgument("symmetric-bounded: weights sum to zero");
                   }
                 },
                 [](const Elliptical& s) {
                   if (!(s.rho > -1.0 && s.rho < 1.0)) throw InvalidArgument("elliptical: rho must lie in (-1, 1)");
                 },
                 [](const ProductSigns& s) {
                   if (s.m < 1) throw InvalidArgument("product-signs: m must be >= 1");
                 },
                 [&](const ErdosRenyi& s) { check_p(s.p); },
                 [&](const DirectedBernoulli& s) { check_p(s.p); },
                 [](const FixedOutdegree& s) {
                   if (s.s < 1 || s.s > s.n - 1) throw InvalidArgument("fixed-outdegree: s must lie in [1, n-1]");
                 },
                 [](const PermutationMatrix&) {},
             },
             spec);
}

namespace {

std::vector<std::uint64_t> bounded_weights(const SymmetricBounded& s) {
  if (s.weights) return *s.weights;
  std::vector<std::uint64_t> w(static_cast<std::size_t>(2 * s.B + 1), 1);
  if (s.mean_zero) w[static_cast<std::size_t>(s.B)] = 0;
  return w;
}

}  // namespace

double entry_variance(const SymmetricBounded& spec) {
  const auto w = bounded_weights(spec);
  const double total = static_cast<double>(std::accumulate(w.begin(), w.end(), std::uint64_t{0}));
  double mean = 0.0;
  double second = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double v = static_cast<double>(static_cast<int>(i) - spec.B);
    mean += v * static_cast<double>(w[i]) / total;
    second += v * v * static_cast<double>(w[i]) / total;
  }
  return second - mean * mean;
}

namespace {

IntMatrix sign_matrix(int n, Rng& rng) {
  IntMatrix m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.sign();
  return m;
}

}  // namespace

Sample sample(const EnsembleSpec& spec, SeedStream stream) {
  validate(spec);
  Rng rng(stream);
  return std::visit(
      Overloaded{
          [&](const RademacherPoly& s) -> Sample {
            std::vector<BigInt> c(static_cast<std::size_t>(s.n) + 1);
            for (int i = 0; i < s.n; ++i) c[i] = rng.sign();
            c[s.n] = 1;
            return IntPoly(std::move(c));
          },
          [&](const UniformPoly& s) -> Sample {
            std::vector<BigInt> c(static_cast<std::size_t>(s.n) + 1);
            for (int i = 0; i < s.n; ++i) c[i] = rng.uniform_below(s.N + 1);
            c[s.n] = 1;
            return IntPoly(std::move(c));
          },
          [&](const ZeroOneKonyagin& s) -> Sample {
            std::vector<BigInt> c(static_cast<std::size_t>(s.n) + 1);
            c[0] = 1;
            for (int i = 1; i < s.n; ++i) c[i] = rng.uniform_below(2);
            c[s.n] = 1;
            return IntPoly(std::move(c));
          },
          [&](const IidSignMatrix& s) -> Sample { return sign_matrix(s.n, rng); },
          [&](const SymmetricBounded& s) -> Sample {
            const auto w = bounded_weights(s);
            const std::uint64_t total = std::accumulate(w.begin(), w.end(), std::uint64_t{0});
            IntMatrix m(static_cast<std::size_t>(s.n));
            for (int i = 0; i < s.n; ++i)
              for (int j = i; j < s.n; ++j) {
                std::uint64_t u = rng.uniform_below(total);
                std::size_t v = 0;
                while (u >= w[v]) u -= w[v++];
                m(i, j) = static_cast<int>(v) - s.B;
                m(j, i) = m(i, j);
              }
            return m;
          },
          [&](const Elliptical& s) -> Sample {
            IntMatrix m(static_cast<std::size_t>(s.n));
            for (int i = 0; i < s.n; ++i)
              for (int j = i; j < s.n; ++j) m(i, j) = rng.sign();
            const double plus = (1.0 + s.rho) / 2.0;
            for (int i = 1; i < s.n; ++i)
              for (int j = 0; j < i; ++j) m(i, j) = rng.bernoulli(plus) ? m(j, i) : BigInt(-m(j, i));
            return m;
          },
          [&](const ProductSigns& s) -> Sample {
            IntMatrix m = sign_matrix(s.n, rng);
            for (int t = 1; t < s.m; ++t) m = m * sign_matrix(s.n, rng);
            return m;
          },
          [&](const ErdosRenyi& s) -> Sample {
            IntMatrix m(static_cast<std::size_t>(s.n));
            for (int i = 0; i < s.n; ++i)
              for (int j = i + 1; j < s.n; ++j) {
                const int e = rng.bernoulli(s.p) ? 1 : 0;
                m(i, j) = e;
                m(j, i) = e;
              }
            return m;
          },
          [&](const DirectedBernoulli& s) -> Sample {
            IntMatrix m(static_cast<std::size_t>(s.n));
            for (int i = 0; i < s.n; ++i)
              for (int j = 0; j < s.n; ++j) m(i, j) = rng.bernoulli(s.p) ? 1 : 0;
            return m;
          },
          [&](const FixedOutdegree& s) -> Sample {
            IntMatrix m(static_cast<std::size_t>(s.n));
            std::vector<int> idx(static_cast<std::size_t>(s.n));
            for (int i = 0; i < s.n; ++i) {
              std::iota(idx.begin(), idx.end(), 0);
              // Partial Fisher-Yates: the first s slots are a uniform s-subset.
              for (int t = 0; t < s.s; ++t) {
                const auto r = t + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(s.n - t)));
                std::swap(idx[t], idx[r]);
                m(i, idx[t]) = 1;
              }
            }
            return m;
          },
          [&](const PermutationMatrix& s) -> Sample {
            std::vector<int> perm(static_cast<std::size_t>(s.n));
            std::iota(perm.begin(), perm.end(), 0);
            for (int i = s.n - 1; i > 0; --i) {
              const auto j = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(i) + 1));
              std::swap(perm[i], perm[j]);
            }
            IntMatrix m(static_cast<std::size_t>(s.n));
            for (int i = 0; i < s.n; ++i) m(i, perm[i]) = 1;
            return m;
          },
      },
      spec);
}

IntPoly sample_polynomial(const EnsembleSpec& spec, SeedStream stream) {
  Sample s = sample(spec, stream);
  if (auto* p = std::get_if<IntPoly>(&s)) return std::move(*p);
  return mat_charpoly_exact(std::get<IntMatrix>(s));
}

IntPoly charpoly_of_sample(const EnsembleSpec& spec, SeedStream stream) {
  if (!is_matrix_model(spec)) throw InvalidArgument(model_name(spec) + " is not a matrix ensemble");
  return mat_charpoly_exact(std::get<IntMatrix>(sample(spec, stream)));
}

}  // namespace polylab
