#pragma once

#include <array>
#include <span>

#include "phasefit/method.hpp"
#include "phasefit/rational.hpp"

namespace phasefit {

inline constexpr int kSteps = 12;
inline constexpr int kHalf = kSteps / 2;

using Coefficients = std::array<double, kSteps + 1>;

// a_0 .. a_12, shared by every method of the family.
inline constexpr std::array<int, kSteps + 1> kA = {1, -2, 2, -1, 0, 0, 0, 0, 0, -1, 2, -2, 1};

enum class CoefficientSource { ClosedForm, Taylor, Constant };

struct CoefficientSet {
  MethodId method = MethodId::Classical;
  Coefficients a{};
  Coefficients b{};
  double v = 0.0;
  CoefficientSource source = CoefficientSource::Constant;
};

struct PrecisionPolicy {
  double taylor_threshold = 0.05;
  double extended_precision_limit = 1.0;
  int extended_digits = 30;

  // Throws std::invalid_argument if the thresholds are inconsistent.
  void validate() const;
};

// b_1 .. b_6 of the classical method as exact fractions.
std::span<const Rational, kHalf> classical_b_exact();

// Printed Taylor coefficients of b_j (j = 1..6) for PF-D<order>, lowest power
// first; entry k multiplies v^(2k).
std::span<const Rational> taylor_terms(int order, int j);

CoefficientSet classical_coefficients();

Coefficients eval_b_taylor(MethodId method, double v, const PrecisionPolicy& policy = {});

Coefficients eval_b_closed(MethodId method, double v, const PrecisionPolicy& policy = {});

CoefficientSet coefficients(MethodId method, double v, const PrecisionPolicy& policy = {});

// Mirror b_1..b_6 into the 13-entry vector with b_0 = b_12 = 0.
template <class Real>
std::array<Real, kSteps + 1> mirror(const std::array<Real, kHalf>& half) {
  std::array<Real, kSteps + 1> b{};
  b[0] = 0;
  b[kSteps] = 0;
  for (int j = 1; j <= kHalf; ++j) {
    b[j] = half[j - 1];
    b[kSteps - j] = half[j - 1];
  }
  return b;
}

// C_q = sum j^q a_j / q! - sum j^(q-2) b_j / (q-2)!  (second term only for q >= 2)
double error_constant(const CoefficientSet& c, int q);

}  // namespace phasefit
