#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>
#include <type_traits>

#include "phasefit/coefficients.hpp"
#include "phasefit/errors.hpp"
#include "phasefit/extended.hpp"

namespace phasefit {

// y'' = f(x, y) on [x0, x_end] with y(x0) = y0, y'(x0) = dy0.
template <class Real = double>
struct SecondOrderIVP {
  std::function<Real(const Real&, const Real&)> f;
  Real x0 = 0;
  Real y0 = 0;
  Real dy0 = 0;
  Real x_end = 0;
};

// Piecewise-constant omega(x); piece i covers [start_i, start_{i+1}). Points
// before the first start use the first piece.
class FrequencySchedule {
 public:
  struct Piece {
    double start;
    double omega;
  };

  explicit FrequencySchedule(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw std::invalid_argument("frequency schedule needs a piece");
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      if (!(pieces_[i].omega >= 0)) throw std::invalid_argument("frequency must be >= 0");
      if (i > 0 && !(pieces_[i].start > pieces_[i - 1].start)) {
        throw std::invalid_argument("schedule breakpoints must be strictly increasing");
      }
    }
  }

  static FrequencySchedule constant(double omega) { return FrequencySchedule({{0.0, omega}}); }

  double omega_at(double x) const {
    std::size_t i = 0;
    while (i + 1 < pieces_.size() && x >= pieces_[i + 1].start) ++i;
    return pieces_[i].omega;
  }

  const std::vector<Piece>& pieces() const { return pieces_; }

 private:
  std::vector<Piece> pieces_;
};

template <class Real = double>
struct Trajectory {
  MethodId method = MethodId::Classical;
  Real h = 0;
  std::vector<Real> xs;
  std::vector<Real> ys;
  std::int64_t bootstrap_substeps = 0;  // RK4 substeps per h used for the starting values
  std::int64_t steps = 0;               // multistep applications
  std::size_t coefficient_sets = 0;     // distinct v values encountered
};

template <class Real>
using Window = std::array<Real, kSteps>;

template <class Real>
struct StartingValues {
  Window<Real> y{};
  int refinements = 0;  // substep is h / 2^refinements
};

namespace detail {

template <class Real>
struct Compensated {
  Real sum = 0;
  Real carry = 0;
  void add(const Real& x) {
    const Real y = x - carry;
    const Real t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// Classical RK4 on (y, y') over 11 intervals of h with 2^m substeps each.
template <class Real>
Window<Real> rk4_window(const SecondOrderIVP<Real>& ivp, const Real& h, int m) {
  const std::int64_t sub = std::int64_t{1} << m;
  const Real H = h / Real(sub);
  Compensated<Real> y{ivp.y0, 0};
  Compensated<Real> dy{ivp.dy0, 0};
  Window<Real> out{};
  out[0] = ivp.y0;
  for (int n = 0; n < kSteps - 1; ++n) {
    for (std::int64_t k = 0; k < sub; ++k) {
      const Real x = ivp.x0 + Real(n) * h + Real(k) * H;
      const Real y0 = y.sum;
      const Real d0 = dy.sum;
      const Real k1y = d0;
      const Real k1d = ivp.f(x, y0);
      const Real k2y = d0 + H / 2 * k1d;
      const Real k2d = ivp.f(x + H / 2, y0 + H / 2 * k1y);
      const Real k3y = d0 + H / 2 * k2d;
      const Real k3d = ivp.f(x + H / 2, y0 + H / 2 * k2y);
      const Real k4y = d0 + H * k3d;
      const Real k4d = ivp.f(x + H, y0 + H * k3y);
      y.add(H / 6 * (k1y + 2 * k2y + 2 * k3y + k4y));
      dy.add(H / 6 * (k1d + 2 * k2d + 2 * k3d + k4d));
    }
    out[n + 1] = y.sum;
  }
  return out;
}

}  // namespace detail

// y_0 .. y_11 by RK4 step doubling until consecutive refinements agree to
// 1e-14 * max(1, |y|) at every point; returns the finer run.
template <class Real>
StartingValues<Real> bootstrap(const SecondOrderIVP<Real>& ivp, const Real& h) {
  using std::abs;
  if (!(h > 0)) throw std::invalid_argument("bootstrap needs h > 0");
  constexpr int kMaxRefinements = 20;
  Window<Real> coarse = detail::rk4_window(ivp, h, 0);
  for (int m = 1; m <= kMaxRefinements; ++m) {
    Window<Real> fine = detail::rk4_window(ivp, h, m);
    bool ok = true;
    for (int n = 0; n < kSteps && ok; ++n) {
      const Real scale = abs(fine[n]) > 1 ? abs(fine[n]) : Real(1);
      ok = abs(fine[n] - coarse[n]) < Real(1e-14) * scale;
    }
    if (ok) return {fine, m};
    coarse = fine;
  }
  throw ToleranceUnreachable("starting values did not reach 1e-14 within 2^20 substeps");
}

// y_{n+12} = -sum_{j<12} a_j y_{n+j} + h^2 sum_{j=1}^{11} b_j f_{n+j}
template <class Real>
Real step(const std::array<Real, kSteps + 1>& b, const Window<Real>& y, const Window<Real>& f,
          const Real& h) {
  Real lin = 0;
  for (int j = 0; j < kSteps; ++j) {
    if (kA[j] != 0) lin -= Real(kA[j]) * y[j];
  }
  Real rhs = 0;
  for (int j = 1; j < kSteps; ++j) rhs += b[j] * f[j];
  return lin + h * h * rhs;
}

template <class Real>
Real step(MethodId method, const Window<Real>& y, const Window<Real>& f, const Real& h, double v,
          const PrecisionPolicy& policy = {}) {
  return step(b_as<Real>(method, v, policy), y, f, h);
}

// Number of whole steps of size h in [x0, x_end], tolerant to roundoff in
// (x_end - x0) / h.
inline std::int64_t step_count(double span, double h) {
  const double r = span / h;
  const double nearest = std::round(r);
  if (std::abs(r - nearest) <= 1e-9 * std::max(1.0, r)) return static_cast<std::int64_t>(nearest);
  return static_cast<std::int64_t>(std::floor(r));
}

template <class Real>
Trajectory<Real> integrate(const SecondOrderIVP<Real>& ivp, MethodId method, const Real& h,
                           const FrequencySchedule& schedule, const PrecisionPolicy& policy = {},
                           const std::optional<std::type_identity_t<Window<Real>>>& start = std::nullopt) {
  if (!(h > 0)) throw std::invalid_argument("integrate needs h > 0");
  if (!(ivp.x_end > ivp.x0)) throw std::invalid_argument("integrate needs x_end > x0");
  const std::int64_t n_steps =
      step_count(static_cast<double>(ivp.x_end - ivp.x0), static_cast<double>(h));
  if (n_steps < kSteps) {
    throw std::invalid_argument("integration window shorter than 12 steps");
  }

  Trajectory<Real> t;
  t.method = method;
  t.h = h;
  t.xs.resize(n_steps + 1);
  t.ys.resize(n_steps + 1);
  for (std::int64_t n = 0; n <= n_steps; ++n) t.xs[n] = ivp.x0 + Real(n) * h;

  if (start) {
    for (int n = 0; n < kSteps; ++n) t.ys[n] = (*start)[n];
  } else {
    const StartingValues<Real> sv = bootstrap(ivp, h);
    for (int n = 0; n < kSteps; ++n) t.ys[n] = sv.y[n];
    t.bootstrap_substeps = std::int64_t{1} << sv.refinements;
  }

  std::vector<Real> fs(n_steps + 1);
  for (int n = 0; n < kSteps; ++n) fs[n] = ivp.f(t.xs[n], t.ys[n]);

  std::map<double, std::array<Real, kSteps + 1>> cache;
  const double hd = static_cast<double>(h);
  Window<Real> yw, fw;
  for (std::int64_t n = 0; n + kSteps <= n_steps; ++n) {
    const std::int64_t target = n + kSteps;
    const double v =
        method == MethodId::Classical ? 0.0 : schedule.omega_at(static_cast<double>(t.xs[target])) * hd;
    auto it = cache.find(v);
    if (it == cache.end()) it = cache.emplace(v, b_as<Real>(method, v, policy)).first;
    for (int j = 0; j < kSteps; ++j) {
      yw[j] = t.ys[n + j];
      fw[j] = fs[n + j];
    }
    t.ys[target] = step(it->second, yw, fw, h);
    fs[target] = ivp.f(t.xs[target], t.ys[target]);
  }
  t.steps = n_steps - kSteps + 1;
  t.coefficient_sets = cache.size();
  return t;
}

}  // namespace phasefit
