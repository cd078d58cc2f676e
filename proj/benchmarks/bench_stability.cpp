#include <benchmark/benchmark.h>

#include "phasefit/stability.hpp"

using namespace phasefit;

static void BM_roots(benchmark::State& state) {
  const auto p = characteristic_polynomial(MethodId::PFD2, 0.4, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(roots(p));
}
BENCHMARK(BM_roots);

static void BM_is_stable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(is_stable(MethodId::Classical, 0.2, 0.0));
}
BENCHMARK(BM_is_stable);

static void BM_stability_grid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stability_grid(MethodId::PFD4, {0.0, 1.5, 0.0, 1.5}, n, n, kStabilityTol, threads));
  }
}
BENCHMARK(BM_stability_grid)->Args({100, 1})->Args({100, 4})->Args({300, 4})->Unit(benchmark::kMillisecond);
