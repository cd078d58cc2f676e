#include <benchmark/benchmark.h>

#include <cmath>

#include "phasefit/integrator.hpp"
#include "phasefit/schrodinger.hpp"

using namespace phasefit;

static void BM_step(benchmark::State& state) {
  const auto c = coefficients(MethodId::PFD3, 0.3);
  Window<double> y{}, f{};
  for (int n = 0; n < kSteps; ++n) {
    y[n] = std::sin(0.3 * n);
    f[n] = -y[n];
  }
  for (auto _ : state) benchmark::DoNotOptimize(step(c.b, y, f, 0.3));
}
BENCHMARK(BM_step);

static void BM_oscillator(benchmark::State& state) {
  SecondOrderIVP<double> ivp;
  ivp.f = [](const double&, const double& y) { return -y; };
  ivp.y0 = 0.0;
  ivp.dy0 = 1.0;
  ivp.x_end = 100.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(ivp, MethodId::PFD0, 0.01, FrequencySchedule::constant(1.0)));
  }
}
BENCHMARK(BM_oscillator)->Unit(benchmark::kMillisecond);

static void BM_resonance(benchmark::State& state) {
  const double h = 15.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_benchmark(MethodId::PFD5, 341.495874, h));
}
BENCHMARK(BM_resonance)->Arg(480)->Arg(3840)->Unit(benchmark::kMillisecond);
