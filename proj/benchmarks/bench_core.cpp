#include <benchmark/benchmark.h>

#include "toricsplit/families.hpp"
#include "toricsplit/graphs.hpp"
#include "toricsplit/splitting.hpp"
#include "toricsplit/supports.hpp"

using namespace toricsplit;

static void BM_GraverSymmetricCurve(benchmark::State& state) {
  const auto f = symmetric_curve(1, state.range(0));
  for (auto _ : state) {
    Budget budget(100'000'000);
    benchmark::DoNotOptimize(graver_basis(f.config, budget));
  }
}
BENCHMARK(BM_GraverSymmetricCurve)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_GraverHeightSeven(benchmark::State& state) {
  const Configuration a(Catalogue::builtin().entry("ex2_8").matrix);
  for (auto _ : state) {
    Budget budget(100'000'000);
    benchmark::DoNotOptimize(graver_basis(a, budget));
  }
}
BENCHMARK(BM_GraverHeightSeven)->Unit(benchmark::kMillisecond);

static void BM_CircuitsCyclic(benchmark::State& state) {
  const auto f = cyclic_configuration(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(circuits(f.config));
}
BENCHMARK(BM_CircuitsCyclic)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_GammaLawrence(benchmark::State& state) {
  const auto f = lawrence_of_symmetric_curve(2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_graph(f.config));
}
BENCHMARK(BM_GammaLawrence)->Unit(benchmark::kMillisecond);

static void BM_FindCoverComplete(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const auto g = BipartiteGraph::complete(m, n);
  const auto a = incidence_configuration(g);
  const auto gens = cycle_generators(g);
  for (auto _ : state) {
    Budget budget(100'000'000);
    benchmark::DoNotOptimize(find_cover(a, gens, 2, budget));
    benchmark::DoNotOptimize(find_cover(a, gens, 3, budget));
  }
}
BENCHMARK(BM_FindCoverComplete)->Args({3, 3})->Args({3, 4})->Args({4, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
