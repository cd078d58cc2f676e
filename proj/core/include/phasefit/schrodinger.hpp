#pragma once

#include <functional>

#include "phasefit/integrator.hpp"
#include "phasefit/method.hpp"

namespace phasefit {

struct WoodsSaxonParams {
  double u0 = -50.0;
  double a = 0.6;  // diffuseness
  double x0 = 7.0;

  double u1() const { return -u0 / a; }
};

// V(x) = u0 / (1 + q) + u1 q / (1 + q)^2,  q = exp((x - x0) / a)
double woods_saxon(double x, const WoodsSaxonParams& p = {});

struct RadialProblem {
  int l = 0;
  double E = 0.0;
};

// (x, y) -> (l(l+1)/x^2 + V(x) - E) y
std::function<double(const double&, const double&)> rhs(const RadialProblem& problem,
                                                        const WoodsSaxonParams& p = {});

// omega = sqrt(E - 50) on [0, 6.5), sqrt(E) from 6.5 on.
FrequencySchedule ixaru_schedule(double E);

struct SphericalBessel {
  double j = 0.0;
  double n = 0.0;
};

SphericalBessel spherical_bessel(int l, double z);

struct PhaseShiftResult {
  double delta = 0.0;  // in (-pi/2, pi/2]
  double reference = 0.0;
  double digits = 0.0;  // -log10 of the distance to the reference modulo pi
};

// Distance between angles modulo pi and the matching digits.
double angular_distance(double a, double b);
double accuracy_digits(double delta, double reference);

// Two-point matching against S = kx j_l(kx), C = kx n_l(kx).
PhaseShiftResult phase_shift(double y_i, double y_ip1, double x_i, double x_ip1, double k, int l);

struct BenchmarkConfig {
  WoodsSaxonParams potential;
  int l = 0;
  double x_end = 15.0;
  double dy0 = 1.0;
};

// Radial solution on [0, x_end] with y(0) = 0, y'(0) = dy0 and the Ixaru-Rizea schedule.
Trajectory<double> solve_radial(MethodId method, double E, double h, const BenchmarkConfig& cfg = {},
                                const PrecisionPolicy& policy = {});

// Matches on the grid pair (N - 1 - back, N - back) of the trajectory.
PhaseShiftResult phase_shift_from(const Trajectory<double>& t, double E, int l, int back = 0);

PhaseShiftResult run_benchmark(MethodId method, double E, double h, const BenchmarkConfig& cfg = {},
                               const PrecisionPolicy& policy = {});

// Resonance energies of the benchmark.
inline constexpr double kBenchmarkEnergies[] = {989.701916, 341.495874, 163.215341};

}  // namespace phasefit
