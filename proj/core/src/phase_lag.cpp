#include "phasefit/phase_lag.hpp"

#include <stdexcept>

#include "phasefit/extended.hpp"

namespace phasefit {

namespace {

using Ext = Float100;

// Printed polynomials coeff_0 .. coeff_5: weights of y^(14 - 2m) omega^(2m), m = 0, 1, ...
constexpr int kCoeff0[] = {1, 1};
constexpr int kCoeff1[] = {1, 2, 1};
constexpr int kCoeff2[] = {1, 3, 3, 1};
constexpr int kCoeff3[] = {1, 4, 6, 4, 1};
constexpr int kCoeff4[] = {1, 5, 10, 10, 5, 1};
constexpr int kCoeff5[] = {1, 6, 15, 20, 15, 6, 1};
constexpr int kClassical[] = {1};

std::span<const int> plte_weights(MethodId m) {
  switch (m) {
    case MethodId::Classical: return kClassical;
    case MethodId::PFD0: return kCoeff0;
    case MethodId::PFD1: return kCoeff1;
    case MethodId::PFD2: return kCoeff2;
    case MethodId::PFD3: return kCoeff3;
    case MethodId::PFD4: return kCoeff4;
    case MethodId::PFD5: return kCoeff5;
  }
  return {};
}

std::array<Ext, kSteps + 1> extended_b(MethodId method, double v, const PrecisionPolicy& policy) {
  const CoefficientSet c = coefficients(method, v, policy);
  if (c.source == CoefficientSource::ClosedForm && v < policy.extended_precision_limit &&
      closed_form_digits(v, policy) <= 100) {
    return mirror(closed_form_b<Ext>(method, Ext(v)));
  }
  std::array<Ext, kSteps + 1> b{};
  if (method == MethodId::Classical) return b_as<Ext>(method, v, policy);
  for (int j = 0; j <= kSteps; ++j) b[j] = Ext(c.b[j]);
  return b;
}

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

CharCoefficients char_coeffs(const CoefficientSet& c, double s) {
  CharCoefficients out;
  out.A = char_coeffs<double>(c.b, s);
  out.s = s;
  out.v = c.v;
  return out;
}

CharCoefficients char_coeffs(MethodId method, double s, double v, const PrecisionPolicy& policy) {
  if (!(s >= 0) || !(v >= 0)) throw DomainError("char_coeffs needs s >= 0 and v >= 0");
  auto out = char_coeffs(coefficients(method, v, policy), s);
  out.v = v;
  return out;
}

double phase_lag(const CoefficientSet& c, double s) {
  return phase_lag<double>(c.b, s);
}

double phase_lag(MethodId method, double s, double v, const PrecisionPolicy& policy) {
  return phase_lag(coefficients(method, v, policy), s);
}

DerivativeEstimate phase_lag_derivative(MethodId method, double s, double v, int order,
                                        const PrecisionPolicy& policy) {
  if (order < 1 || order > 6) throw std::invalid_argument("derivative order must be 1..6");
  const auto b = extended_b(method, v, policy);
  const Ext x(s);

  // Central difference delta^n f / h^n; nodes at x + (n/2 - k) h, error series in h^2.
  auto central = [&](const Ext& h) {
    Ext acc = 0;
    for (int k = 0; k <= order; ++k) {
      const Ext node = x + (Ext(order) / 2 - k) * h;
      const Ext term = Ext(binomial(order, k)) * phase_lag<Ext>(b, node);
      acc += (k % 2 == 0) ? term : -term;
    }
    Ext hn = 1;
    for (int k = 0; k < order; ++k) hn *= h;
    return acc / hn;
  };

  constexpr int kLevels = 4;
  const double step = std::max(1e-3, 1e-2 * s);
  std::array<std::array<Ext, kLevels>, kLevels> R{};
  Ext h(step);
  for (int i = 0; i < kLevels; ++i, h /= 2) {
    R[i][0] = central(h);
    Ext factor = 4;
    for (int j = 1; j <= i; ++j, factor *= 4) {
      R[i][j] = R[i][j - 1] + (R[i][j - 1] - R[i - 1][j - 1]) / (factor - 1);
    }
  }
  const Ext best = R[kLevels - 1][kLevels - 1];
  const Ext prev = R[kLevels - 2][kLevels - 2];
  return {static_cast<double>(best), static_cast<double>(abs(best - prev))};
}

std::vector<PlteTerm> plte_terms(MethodId method) {
  const auto weights = plte_weights(method);
  std::vector<PlteTerm> terms;
  for (std::size_t m = 0; m < weights.size(); ++m) {
    Rational c{kPlteFactor.num * weights[m], kPlteFactor.den};
    terms.push_back({14 - 2 * static_cast<int>(m), 2 * static_cast<int>(m), c.reduced()});
  }
  return terms;
}

double plte_estimate(MethodId method, const std::array<double, 15>& y, double omega, double h) {
  double sum = 0.0;
  for (const auto& t : plte_terms(method)) {
    sum += t.coefficient.value() * y[t.derivative] * std::pow(omega, t.omega_power);
  }
  return sum * std::pow(h, 14);
}

}  // namespace phasefit
