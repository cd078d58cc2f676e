#include "phasefit/coefficients.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "phasefit/errors.hpp"
#include "phasefit/extended.hpp"
#include "taylor_table.hpp"

namespace phasefit {

namespace {

constexpr std::array<Rational, kHalf> kClassicalB = {{
    {90987349, 53222400},
    {-114798419, 26611200},
    {270875723, 17740800},
    {-67855831, 2217600},
    {50277247, 985600},
    {-253491379, 4435200},
}};

Coefficients a_vector() {
  Coefficients a{};
  for (int j = 0; j <= kSteps; ++j) a[j] = kA[j];
  return a;
}

void require_fitted(MethodId m) {
  if (m == MethodId::Classical) {
    throw std::invalid_argument("classical method has no v-dependent representation");
  }
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// Poles of the closed forms: csc(v/2) at 2*pi*k for all methods; the
// higher-order variants also carry sec(v/2), csc(v), 1/(1 + cos v).
void check_poles(MethodId m, double v) {
  const double period = m == MethodId::PFD0 ? 2 * std::numbers::pi : std::numbers::pi;
  const double k = std::round(v / period);
  if (k >= 1 && std::abs(v - k * period) < 1e-9 * std::max(1.0, v)) {
    throw DomainError("closed form of " + std::string(method_name(m)) + " is singular at v = " +
                      fmt(v));
  }
}

template <class Real>
std::array<double, kHalf> closed_in(MethodId m, double v) {
  const auto b = closed_form_b<Real>(m, Real(v));
  std::array<double, kHalf> out{};
  for (int j = 0; j < kHalf; ++j) out[j] = static_cast<double>(b[j]);
  return out;
}

}  // namespace

void PrecisionPolicy::validate() const {
  if (!(taylor_threshold > 0) || !(taylor_threshold < extended_precision_limit)) {
    throw std::invalid_argument("precision policy needs 0 < taylor_threshold < extended_precision_limit");
  }
  if (extended_digits < 30) {
    throw std::invalid_argument("precision policy needs extended_digits >= 30");
  }
}

std::span<const Rational, kHalf> classical_b_exact() {
  return kClassicalB;
}

std::span<const Rational> taylor_terms(int order, int j) {
  if (order < 0 || order > 5 || j < 1 || j > kHalf) {
    throw std::out_of_range("taylor_terms: order must be 0..5 and j 1..6");
  }
  return detail::taylor_terms(order, j);
}

CoefficientSet classical_coefficients() {
  CoefficientSet c;
  c.method = MethodId::Classical;
  c.a = a_vector();
  std::array<double, kHalf> half{};
  for (int j = 0; j < kHalf; ++j) half[j] = kClassicalB[j].value();
  c.b = mirror(half);
  c.v = 0.0;
  c.source = CoefficientSource::Constant;
  return c;
}

Coefficients eval_b_taylor(MethodId method, double v, const PrecisionPolicy& policy) {
  require_fitted(method);
  policy.validate();
  if (!(std::abs(v) <= policy.taylor_threshold)) {
    throw RangeError("Taylor branch requested at |v| = " + fmt(std::abs(v)) +
                     " beyond threshold " + fmt(policy.taylor_threshold));
  }
  const double v2 = v * v;
  std::array<double, kHalf> half{};
  for (int j = 1; j <= kHalf; ++j) {
    const auto terms = detail::taylor_terms(elimination_order(method), j);
    double acc = 0.0;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) acc = acc * v2 + it->value();
    half[j - 1] = acc;
  }
  return mirror(half);
}

int closed_form_digits(double v, const PrecisionPolicy& policy) {
  const double loss = v < 1.0 ? std::ceil(14.0 * std::log10(1.0 / v)) : 0.0;
  return policy.extended_digits + static_cast<int>(loss) + 6;
}

Coefficients eval_b_closed(MethodId method, double v, const PrecisionPolicy& policy) {
  require_fitted(method);
  policy.validate();
  if (!(v > 0) || !std::isfinite(v)) {
    throw DomainError("closed form needs finite v > 0, got " + fmt(v));
  }
  check_poles(method, v);

  std::array<double, kHalf> half{};
  if (v >= policy.extended_precision_limit) {
    // Cancellation is mild here, but double still drops about three digits.
    half = closed_in<Float50>(method, v);
  } else {
    const int digits = closed_form_digits(v, policy);
    if (digits <= 50) {
      half = closed_in<Float50>(method, v);
    } else if (digits <= 100) {
      half = closed_in<Float100>(method, v);
    } else if (digits <= 200) {
      half = closed_in<Float200>(method, v);
    } else if (digits <= 400) {
      half = closed_in<Float400>(method, v);
    } else {
      throw DomainError("v = " + fmt(v) + " too small for the closed form (needs " +
                        std::to_string(digits) + " digits); use the Taylor branch");
    }
  }
  return mirror(half);
}

CoefficientSet coefficients(MethodId method, double v, const PrecisionPolicy& policy) {
  if (method == MethodId::Classical) return classical_coefficients();
  if (!(v >= 0) || !std::isfinite(v)) {
    throw DomainError("coefficients need finite v >= 0, got " + fmt(v));
  }
  CoefficientSet c;
  c.method = method;
  c.a = a_vector();
  c.v = v;
  if (v < policy.taylor_threshold) {
    c.b = eval_b_taylor(method, v, policy);
    c.source = CoefficientSource::Taylor;
  } else {
    c.b = eval_b_closed(method, v, policy);
    c.source = CoefficientSource::ClosedForm;
  }
  return c;
}

double error_constant(const CoefficientSet& c, int q) {
  if (q < 0) throw std::invalid_argument("error_constant: q must be >= 0");
  double sa = 0.0;
  double sb = 0.0;
  for (int j = 0; j <= kSteps; ++j) {
    sa += std::pow(j, q) * c.a[j];
    if (q >= 2) sb += std::pow(j, q - 2) * c.b[j];
  }
  return sa / std::tgamma(q + 1.0) - (q >= 2 ? sb / std::tgamma(q - 1.0) : 0.0);
}

}  // namespace phasefit
