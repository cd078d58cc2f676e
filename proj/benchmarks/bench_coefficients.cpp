#include <benchmark/benchmark.h>

#include "phasefit/coefficients.hpp"
#include "phasefit/phase_lag.hpp"

using namespace phasefit;

static void BM_taylor(benchmark::State& state) {
  const auto m = phase_fitted(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eval_b_taylor(m, 0.03));
}
BENCHMARK(BM_taylor)->DenseRange(0, 5);

// v picks the precision tier: 0.06 -> 100 digits, 0.5 -> 50 digits, 1.2 -> 50 digits.
static void BM_closed_form(benchmark::State& state) {
  const double v = state.range(0) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(eval_b_closed(MethodId::PFD5, v));
}
BENCHMARK(BM_closed_form)->Arg(6)->Arg(50)->Arg(120);

static void BM_phase_lag(benchmark::State& state) {
  const auto c = coefficients(MethodId::PFD3, 0.7);
  double s = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phase_lag(c, s));
    s = s < 1.4 ? s + 1e-3 : 0.1;
  }
}
BENCHMARK(BM_phase_lag);

static void BM_phase_lag_derivative(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phase_lag_derivative(MethodId::PFD5, 1.0, 1.0, order));
}
BENCHMARK(BM_phase_lag_derivative)->Arg(1)->Arg(6)->Unit(benchmark::kMillisecond);
