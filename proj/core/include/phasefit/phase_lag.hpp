#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "phasefit/coefficients.hpp"
#include "phasefit/errors.hpp"

namespace phasefit {

struct CharCoefficients {
  std::array<double, kHalf + 1> A{};  // A_0 .. A_6
  double s = 0.0;
  double v = 0.0;
};

// A_j = a_{6-j} + s^2 b_{6-j}
template <class Real>
std::array<Real, kHalf + 1> char_coeffs(const std::array<Real, kSteps + 1>& b, const Real& s) {
  std::array<Real, kHalf + 1> A{};
  const Real s2 = s * s;
  for (int j = 0; j <= kHalf; ++j) A[j] = Real(kA[kHalf - j]) + s2 * b[kHalf - j];
  return A;
}

CharCoefficients char_coeffs(const CoefficientSet& c, double s);
CharCoefficients char_coeffs(MethodId method, double s, double v, const PrecisionPolicy& policy = {});

// PL = (2 sum_{j>=1} A_j cos(js) + A_0) / (2 sum_{j>=1} j^2 A_j)
template <class Real>
Real phase_lag(const std::array<Real, kSteps + 1>& b, const Real& s) {
  using std::abs;
  using std::cos;
  const auto A = char_coeffs(b, s);
  Real num = A[0];
  Real den = 0;
  Real scale = 0;
  for (int j = 1; j <= kHalf; ++j) {
    num += 2 * A[j] * cos(j * s);
    den += 2 * j * j * A[j];
    scale += 2 * j * j * abs(A[j]);
  }
  if (abs(den) < 1e-14 * scale) {
    throw SingularDenominator("phase-lag denominator vanishes");
  }
  return num / den;
}

double phase_lag(const CoefficientSet& c, double s);
double phase_lag(MethodId method, double s, double v, const PrecisionPolicy& policy = {});

struct DerivativeEstimate {
  double value = 0.0;
  double error = 0.0;
};

// d^order PL / ds^order at fixed v by central differences with Richardson
// extrapolation, evaluated in extended precision. order in 1..6.
DerivativeEstimate phase_lag_derivative(MethodId method, double s, double v, int order,
                                        const PrecisionPolicy& policy = {});

struct PlteTerm {
  int derivative = 0;    // k in y^(k)
  int omega_power = 0;   // exponent of omega
  Rational coefficient;  // includes the common factor
};

// Common factor of every principal local truncation error in the family.
inline constexpr Rational kPlteFactor{16301796103, 290594304000};

// Terms of factor * coeff_i; for Classical the single y^(14) term.
std::vector<PlteTerm> plte_terms(MethodId method);

// y[k] holds y^(k)(x) for k = 0..14 (entries below 2 are unused).
double plte_estimate(MethodId method, const std::array<double, 15>& y, double omega, double h);

}  // namespace phasefit
