#include <benchmark/benchmark.h>

#include "polylab/ensembles.hpp"
#include "polylab/experiments.hpp"
#include "polylab/factor_search.hpp"
#include "polylab/int_matrix.hpp"
#include "polylab/roots.hpp"

using namespace polylab;

static void BM_Charpoly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const IntMatrix a = std::get<IntMatrix>(sample(IidSignMatrix{n}, {1, 0}));
  for (auto _ : state) benchmark::DoNotOptimize(mat_charpoly_exact(a));
}
BENCHMARK(BM_Charpoly)->Arg(6)->Arg(12)->Arg(24);

static void BM_FindRoots(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const IntPoly f = sample_polynomial(RademacherPoly{n}, {2, 0});
  for (auto _ : state) benchmark::DoNotOptimize(find_roots(f));
}
BENCHMARK(BM_FindRoots)->Arg(12)->Arg(32)->Arg(64);

static void BM_SubsetSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(low_degree_factors(sample_polynomial(RademacherPoly{n}, {3, i++}), 2));
}
BENCHMARK(BM_SubsetSearch)->Arg(12)->Arg(24);

static void BM_Classify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify_irreducibility(sample_polynomial(RademacherPoly{n}, {4, i++})));
}
BENCHMARK(BM_Classify)->Arg(12)->Arg(20);

static void BM_Census(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_reducibility(n, 1));
}
BENCHMARK(BM_Census)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
