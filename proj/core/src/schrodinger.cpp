#include "phasefit/schrodinger.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace phasefit {

double woods_saxon(double x, const WoodsSaxonParams& p) {
  const double t = (x - p.x0) / p.a;
  if (t > 700.0) return 0.0;
  const double q = std::exp(t);
  const double d = 1.0 + q;
  return p.u0 / d + p.u1() * q / (d * d);
}

std::function<double(const double&, const double&)> rhs(const RadialProblem& problem,
                                                        const WoodsSaxonParams& p) {
  if (problem.l < 0) throw DomainError("angular momentum must be >= 0");
  if (!(problem.E > 0)) throw DomainError("energy must be > 0");
  const double ll = static_cast<double>(problem.l) * (problem.l + 1);
  const double E = problem.E;
  return [ll, E, p](const double& x, const double& y) {
    double w = woods_saxon(x, p) - E;
    if (ll != 0.0) {
      if (x == 0.0) throw DomainError("centrifugal term is singular at x = 0");
      w += ll / (x * x);
    }
    return w * y;
  };
}

FrequencySchedule ixaru_schedule(double E) {
  if (!(E > 50.0)) throw RangeError("frequency schedule needs E > 50");
  return FrequencySchedule({{0.0, std::sqrt(E - 50.0)}, {6.5, std::sqrt(E)}});
}

SphericalBessel spherical_bessel(int l, double z) {
  if (!(z > 0)) throw DomainError("spherical Bessel functions need z > 0");
  if (l < 0) throw DomainError("spherical Bessel order must be >= 0");
  const double s = std::sin(z);
  const double c = std::cos(z);
  double j0 = s / z, n0 = -c / z;
  if (l == 0) return {j0, n0};
  double j1 = s / (z * z) - c / z, n1 = -c / (z * z) - s / z;
  for (int k = 1; k < l; ++k) {
    const double f = (2 * k + 1) / z;
    const double j2 = f * j1 - j0;
    const double n2 = f * n1 - n0;
    j0 = j1;
    j1 = j2;
    n0 = n1;
    n1 = n2;
  }
  return {j1, n1};
}

double angular_distance(double a, double b) {
  const double d = std::fmod(std::abs(a - b), std::numbers::pi);
  return std::min(d, std::numbers::pi - d);
}

double accuracy_digits(double delta, double reference) {
  const double d = angular_distance(delta, reference);
  return d > 0 ? -std::log10(d) : std::numeric_limits<double>::infinity();
}

PhaseShiftResult phase_shift(double y_i, double y_ip1, double x_i, double x_ip1, double k, int l) {
  if (!(x_i < x_ip1)) throw DomainError("matching points must satisfy x_i < x_ip1");
  const auto bi = spherical_bessel(l, k * x_i);
  const auto bj = spherical_bessel(l, k * x_ip1);
  const double S_i = k * x_i * bi.j, S_j = k * x_ip1 * bj.j;
  const double C_i = k * x_i * bi.n, C_j = k * x_ip1 * bj.n;
  const double num = y_i * S_j - y_ip1 * S_i;
  const double den = y_ip1 * C_i - y_i * C_j;

  PhaseShiftResult r;
  r.reference = std::numbers::pi / 2;
  if (den == 0.0) {
    if (num == 0.0) throw SingularDenominator("phase-shift quotient is 0/0");
    r.delta = std::numbers::pi / 2;
  } else {
    r.delta = std::atan(num / den);
  }
  r.digits = accuracy_digits(r.delta, r.reference);
  return r;
}

Trajectory<double> solve_radial(MethodId method, double E, double h, const BenchmarkConfig& cfg,
                                const PrecisionPolicy& policy) {
  if (!(h > 0) || cfg.x_end / h < 24) throw std::invalid_argument("benchmark needs x_end / h >= 24");
  SecondOrderIVP<double> ivp;
  ivp.f = rhs({cfg.l, E}, cfg.potential);
  ivp.x0 = 0.0;
  ivp.y0 = 0.0;
  ivp.dy0 = cfg.dy0;
  ivp.x_end = cfg.x_end;
  return integrate(ivp, method, h, ixaru_schedule(E), policy);
}

PhaseShiftResult phase_shift_from(const Trajectory<double>& t, double E, int l, int back) {
  const auto n = static_cast<std::ptrdiff_t>(t.xs.size()) - 1 - back;
  if (back < 0 || n < 1) throw std::invalid_argument("matching pair outside the trajectory");
  return phase_shift(t.ys[n - 1], t.ys[n], t.xs[n - 1], t.xs[n], std::sqrt(E), l);
}

PhaseShiftResult run_benchmark(MethodId method, double E, double h, const BenchmarkConfig& cfg,
                               const PrecisionPolicy& policy) {
  return phase_shift_from(solve_radial(method, E, h, cfg, policy), E, cfg.l);
}

}  // namespace phasefit
