#pragma once

#include <array>

#include <boost/multiprecision/mpfr.hpp>

#include "phasefit/coefficients.hpp"

namespace phasefit {

template <unsigned Digits>
using Float = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<Digits>,
                                            boost::multiprecision::et_off>;

using Float50 = Float<50>;
using Float100 = Float<100>;
using Float200 = Float<200>;
using Float400 = Float<400>;

// Decimal digits needed so the closed forms keep policy.extended_digits after
// cancellation at this v.
int closed_form_digits(double v, const PrecisionPolicy& policy);

// Closed-form b_1..b_6 evaluated entirely in Real. No domain checks.
template <class Real>
std::array<Real, kHalf> closed_form_b(MethodId method, const Real& v);

extern template std::array<double, kHalf> closed_form_b(MethodId, const double&);
extern template std::array<Float50, kHalf> closed_form_b(MethodId, const Float50&);
extern template std::array<Float100, kHalf> closed_form_b(MethodId, const Float100&);
extern template std::array<Float200, kHalf> closed_form_b(MethodId, const Float200&);
extern template std::array<Float400, kHalf> closed_form_b(MethodId, const Float400&);

// Method b-vector in Real. Classical is exact to the precision of Real;
// phase-fitted methods come from the double policy path.
template <class Real>
std::array<Real, kSteps + 1> b_as(MethodId method, double v, const PrecisionPolicy& policy = {}) {
  std::array<Real, kSteps + 1> out{};
  if (method == MethodId::Classical) {
    auto exact = classical_b_exact();
    std::array<Real, kHalf> half{};
    for (int j = 0; j < kHalf; ++j) {
      half[j] = Real(exact[j].num) / Real(exact[j].den);
    }
    return mirror(half);
  }
  const Coefficients b = coefficients(method, v, policy).b;
  for (int j = 0; j <= kSteps; ++j) out[j] = Real(b[j]);
  return out;
}

}  // namespace phasefit
