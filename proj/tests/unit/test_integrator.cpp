#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <boost/math/special_functions/jacobi_elliptic.hpp>

#include "phasefit/integrator.hpp"

using namespace phasefit;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

SecondOrderIVP<double> oscillator(double omega, double y0, double dy0, double x_end) {
  SecondOrderIVP<double> ivp;
  ivp.f = [omega](const double&, const double& y) { return -omega * omega * y; };
  ivp.x0 = 0.0;
  ivp.y0 = y0;
  ivp.dy0 = dy0;
  ivp.x_end = x_end;
  return ivp;
}

}  // namespace

TEST_CASE("frequency schedule", "[integrator]") {
  const FrequencySchedule s({{0.0, 2.0}, {6.5, 3.0}});
  CHECK(s.omega_at(-1.0) == 2.0);
  CHECK(s.omega_at(6.4999) == 2.0);
  CHECK(s.omega_at(6.5) == 3.0);
  CHECK(s.omega_at(100.0) == 3.0);
  CHECK_THROWS_AS(FrequencySchedule({{1.0, 2.0}, {1.0, 3.0}}), std::invalid_argument);
  CHECK_THROWS_AS(FrequencySchedule({{0.0, -1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(FrequencySchedule({}), std::invalid_argument);
}

TEST_CASE("bootstrap", "[integrator]") {
  SECTION("linear solution") {
    SecondOrderIVP<double> ivp;
    ivp.f = [](const double&, const double&) { return 0.0; };
    ivp.y0 = 0.0;
    ivp.dy0 = 1.0;
    ivp.x_end = 2.0;
    const auto sv = bootstrap(ivp, 0.1);
    for (int n = 0; n < kSteps; ++n) CHECK_THAT(sv.y[n], WithinAbs(0.1 * n, 1e-15));
  }

  SECTION("sine") {
    const auto sv = bootstrap(oscillator(1.0, 0.0, 1.0, 1.0), 0.05);
    for (int n = 0; n < kSteps; ++n) CHECK_THAT(sv.y[n], WithinAbs(std::sin(0.05 * n), 1e-13));
  }

  SECTION("stiffer cosine") {
    const auto sv = bootstrap(oscillator(10.0, 1.0, 0.0, 1.0), 0.01);
    for (int n = 0; n < kSteps; ++n) CHECK_THAT(sv.y[n], WithinAbs(std::cos(0.1 * n), 1e-12));
  }

  SECTION("unreachable tolerance") {
    SecondOrderIVP<double> ivp;
    ivp.f = [](const double& x, const double&) { return std::sqrt(std::abs(x - 0.05)); };
    ivp.x_end = 1.0;
    CHECK_THROWS_AS(bootstrap(ivp, 0.1), ToleranceUnreachable);
  }
}

TEST_CASE("single step", "[integrator]") {
  const auto b = classical_coefficients().b;
  Window<double> y{}, f{};
  y.fill(3.25);
  CHECK(step(b, y, f, 0.1) == 3.25);

  for (int j = 0; j < kSteps; ++j) y[j] = j;
  CHECK(step(b, y, f, 0.1) == 12.0);

  // Phase-fitted exactness on cos(x).
  const double h = 0.1;
  const auto bf = coefficients(MethodId::PFD0, h).b;
  for (int j = 0; j < kSteps; ++j) {
    y[j] = std::cos(j * h);
    f[j] = -y[j];
  }
  CHECK_THAT(step(bf, y, f, h), WithinRel(std::cos(12 * h), 5e-15));
  CHECK(step(MethodId::PFD0, y, f, h, h) == step(bf, y, f, h));
}

TEST_CASE("time-reversal symmetry of the stencil", "[integrator][property]") {
  // The relation sum a_j y_j = h^2 sum b_j f_j is invariant under j -> 12 - j.
  std::mt19937_64 rng(3);
  std::normal_distribution<double> d;
  for (int k = 0; k < 20; ++k) {
    const auto m = kAllMethods[k % kAllMethods.size()];
    const auto b = coefficients(m, 0.3 + 0.05 * k).b;
    std::array<double, kSteps + 1> y, f;
    for (int j = 0; j <= kSteps; ++j) {
      y[j] = d(rng);
      f[j] = d(rng);
    }
    double fwd = 0.0, bwd = 0.0;
    for (int j = 0; j <= kSteps; ++j) {
      fwd += kA[j] * y[j] - b[j] * f[j];
      bwd += kA[j] * y[kSteps - j] - b[j] * f[kSteps - j];
    }
    double rev = 0.0;
    for (int j = 0; j <= kSteps; ++j) rev += kA[kSteps - j] * y[kSteps - j] - b[kSteps - j] * f[kSteps - j];
    CHECK_THAT(bwd, WithinAbs(rev, 1e-12));
    CHECK_THAT(fwd, WithinAbs(rev, 1e-12));
  }
}

TEST_CASE("phase-fitted integration of the harmonic oscillator", "[integrator]") {
  const double h = M_PI / 50;
  const auto ivp = oscillator(1.0, 0.0, 1.0, 100 * M_PI);
  const auto t = integrate(ivp, MethodId::PFD0, h, FrequencySchedule::constant(1.0));
  REQUIRE(t.xs.size() == 5001);
  CHECK(t.xs.back() == 5000 * h);
  CHECK(std::abs(t.ys.back() - std::sin(t.xs.back())) < 1e-8);
  CHECK(t.coefficient_sets == 1);
  CHECK(t.steps == 5000 - 11);

  for (int i = 0; i <= 5; ++i) {
    const double w = 2.0, hh = 0.01;
    const auto osc = oscillator(w, 1.0, 0.0, 1e4 * hh);
    const auto r = integrate(osc, phase_fitted(i), hh, FrequencySchedule::constant(w));
    INFO(method_name(phase_fitted(i)));
    CHECK(std::abs(r.ys.back() - std::cos(w * r.xs.back())) < 1e-8);
  }
}

TEST_CASE("linearity in the initial data", "[integrator][property]") {
  const auto sched = FrequencySchedule::constant(3.0);
  const auto a = integrate(oscillator(3.0, 1.0, 0.0, 10.0), MethodId::PFD3, 0.02, sched);
  const auto b = integrate(oscillator(3.0, 0.0, 1.0, 10.0), MethodId::PFD3, 0.02, sched);
  const auto c = integrate(oscillator(3.0, 2.0, -0.5, 10.0), MethodId::PFD3, 0.02, sched);
  for (std::size_t n = 0; n < c.ys.size(); n += 37) {
    CHECK_THAT(c.ys[n], WithinAbs(2.0 * a.ys[n] - 0.5 * b.ys[n], 1e-12));
  }
}

TEST_CASE("schedule breakpoint is pointwise", "[integrator]") {
  // Piecewise run equals a constant-schedule run continued from the breakpoint window.
  const double h = 0.05;
  const FrequencySchedule two({{0.0, 1.0}, {2.0, 1.5}});
  const auto ivp = oscillator(1.2, 0.3, 1.0, 5.0);
  const auto full = integrate(ivp, MethodId::PFD1, h, two);
  CHECK(full.coefficient_sets == 2);

  const auto left = integrate(ivp, MethodId::PFD1, h, FrequencySchedule::constant(1.0));
  const std::int64_t nb = 40;  // 2.0 / h, the first step whose newest point is the breakpoint
  for (std::int64_t n = 0; n < nb; ++n) CHECK(full.ys[n] == left.ys[n]);

  SecondOrderIVP<double> tail = ivp;
  tail.x0 = full.xs[nb - kSteps];
  Window<double> start;
  for (int j = 0; j < kSteps; ++j) start[j] = full.ys[nb - kSteps + j];
  const auto right = integrate(tail, MethodId::PFD1, h, FrequencySchedule::constant(1.5), {}, start);
  for (std::size_t n = 0; n < right.ys.size(); ++n) {
    CHECK_THAT(right.ys[n], WithinAbs(full.ys[nb - kSteps + n], 1e-13));
  }
}

TEST_CASE("order of convergence in extended precision", "[integrator]") {
  using Ext = Float50;
  auto endpoint_error = [](double hd) {
    const Ext h(hd);
    SecondOrderIVP<Ext> ivp;
    ivp.f = [](const Ext&, const Ext& y) { return -y; };
    ivp.x0 = 0;
    ivp.y0 = 0;
    ivp.dy0 = 1;
    ivp.x_end = 20;
    Window<Ext> start;
    for (int n = 0; n < kSteps; ++n) start[n] = sin(Ext(n) * h);
    const auto t = integrate(ivp, MethodId::Classical, h, FrequencySchedule::constant(1.0), {}, start);
    return static_cast<double>(abs(t.ys.back() - sin(t.xs.back())));
  };
  const double e1 = endpoint_error(0.1), e2 = endpoint_error(0.05), e3 = endpoint_error(0.025);
  CHECK_THAT(std::log2(e1 / e2), WithinAbs(12.0, 0.5));
  CHECK_THAT(std::log2(e2 / e3), WithinAbs(12.0, 0.5));
}

TEST_CASE("convergence on a nonlinear problem", "[integrator]") {
  // y'' = -y^3, y(0) = 1, y'(0) = 0 is solved by cn(x) with modulus 1/sqrt(2).
  using Ext = Float50;
  const Ext k = 1 / sqrt(Ext(2));
  auto exact = [&](const Ext& x) { return boost::math::jacobi_cn(k, x); };
  auto endpoint_error = [&](double hd) {
    const Ext h(hd);
    SecondOrderIVP<Ext> ivp;
    ivp.f = [](const Ext&, const Ext& y) { return -y * y * y; };
    ivp.x0 = 0;
    ivp.y0 = 1;
    ivp.dy0 = 0;
    ivp.x_end = 6;
    Window<Ext> start;
    for (int n = 0; n < kSteps; ++n) start[n] = exact(Ext(n) * h);
    const auto t = integrate(ivp, MethodId::Classical, h, FrequencySchedule::constant(1.0), {}, start);
    return static_cast<double>(abs(t.ys.back() - exact(t.xs.back())));
  };
  const double e1 = endpoint_error(0.05), e2 = endpoint_error(0.025), e3 = endpoint_error(0.0125);
  CHECK_THAT(std::log2(e1 / e2), WithinAbs(12.0, 0.5));
  CHECK_THAT(std::log2(e2 / e3), WithinAbs(12.0, 0.5));
}

TEST_CASE("integrate preconditions", "[integrator]") {
  auto ivp = oscillator(1.0, 0.0, 1.0, 1.0);
  CHECK_THROWS_AS(integrate(ivp, MethodId::Classical, 0.1, FrequencySchedule::constant(1.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate(ivp, MethodId::Classical, -0.01, FrequencySchedule::constant(1.0)),
                  std::invalid_argument);
  CHECK(step_count(15.0, 15.0 / 480) == 480);
  CHECK(step_count(1.0, 0.3) == 3);
}
