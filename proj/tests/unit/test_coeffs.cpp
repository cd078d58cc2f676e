#include <catch2/catch_amalgamated.hpp>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "phasefit/coefficients.hpp"
#include "phasefit/errors.hpp"
#include "phasefit/extended.hpp"

using namespace phasefit;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using boost::multiprecision::cpp_rational;

namespace {

constexpr MethodId kFitted[] = {MethodId::PFD0, MethodId::PFD1, MethodId::PFD2,
                                MethodId::PFD3, MethodId::PFD4, MethodId::PFD5};

double max_diff(const Coefficients& x, const Coefficients& y) {
  double m = 0.0;
  for (int j = 0; j <= kSteps; ++j) m = std::max(m, std::abs(x[j] - y[j]));
  return m;
}

cpp_rational to_exact(const Rational& r) { return cpp_rational(r.num, r.den); }

}  // namespace

cpp_rational ipow(int base, int e) {
  cpp_rational r = 1;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

TEST_CASE("method names round-trip", "[coeffs]") {
  for (auto m : kAllMethods) CHECK(parse_method(method_name(m)) == m);
  CHECK(method_name(MethodId::PFD3) == "pf-d3");
  CHECK_THROWS_AS(parse_method("pf-d6"), std::invalid_argument);
  CHECK_THROWS_AS(parse_method("Classical"), std::invalid_argument);
}

TEST_CASE("classical coefficient table", "[coeffs]") {
  const auto c = classical_coefficients();
  CHECK(c.source == CoefficientSource::Constant);
  CHECK(c.b[1] == Rational{90987349, 53222400}.value());
  CHECK(c.b[6] == Rational{-253491379, 4435200}.value());
  CHECK(c.b[0] == 0.0);
  CHECK(c.b[12] == 0.0);
  for (int j = 0; j <= kSteps; ++j) {
    CHECK(c.a[j] == kA[j]);
    CHECK(c.b[j] == c.b[kSteps - j]);
  }

  SECTION("order conditions C_0 .. C_13 vanish in exact arithmetic") {
    std::array<cpp_rational, kSteps + 1> b;
    b[0] = b[12] = 0;
    for (int j = 1; j <= kHalf; ++j) b[j] = b[kSteps - j] = to_exact(classical_b_exact()[j - 1]);
    cpp_rational fact_q = 1;
    for (int q = 0; q <= 13; ++q) {
      if (q > 0) fact_q *= q;
      cpp_rational sa = 0, sb = 0;
      for (int j = 0; j <= kSteps; ++j) {
        cpp_rational jq = ipow(j, q);
        sa += jq * kA[j];
        if (q >= 2) sb += ipow(j, q - 2) * b[j];
      }
      const cpp_rational cq = sa / fact_q - (q >= 2 ? sb * q * (q - 1) / fact_q : cpp_rational(0));
      INFO("q = " << q);
      CHECK(cq == 0);
    }
    // The next constant is the method's error constant and must not vanish.
    cpp_rational sa = 0, sb = 0, f14 = 1;
    for (int k = 2; k <= 14; ++k) f14 *= k;
    for (int j = 0; j <= kSteps; ++j) {
      sa += ipow(j, 14) * kA[j];
      sb += ipow(j, 12) * b[j];
    }
    CHECK(sa / f14 - sb * 14 * 13 / f14 != 0);
  }

  SECTION("double error constants agree") {
    CHECK_THAT(error_constant(c, 0), WithinAbs(0.0, 1e-12));
    CHECK_THAT(error_constant(c, 1), WithinAbs(0.0, 1e-12));
    CHECK_THAT(error_constant(c, 2), WithinAbs(0.0, 1e-12));
  }
}

TEST_CASE("stored fractions are reduced without changing value", "[coeffs]") {
  auto check = [](const Rational& r) {
    CHECK(r.den > 0);
    CHECK(same_value(r, r.reduced()));
    CHECK(r.reduced().is_reduced());
  };
  for (const auto& r : classical_b_exact()) check(r);
  for (int i = 0; i <= 5; ++i) {
    for (int j = 1; j <= kHalf; ++j) {
      for (const auto& r : taylor_terms(i, j)) check(r);
    }
  }
  CHECK(same_value(Rational{2, 4}, Rational{1, 2}));
  CHECK_FALSE(same_value(Rational{2, 5}, Rational{1, 2}));
}

TEST_CASE("Taylor series: constant terms are the classical fractions", "[coeffs]") {
  for (int i = 0; i <= 5; ++i) {
    for (int j = 1; j <= kHalf; ++j) {
      const Rational lead = taylor_terms(i, j)[0];
      const Rational ref = classical_b_exact()[j - 1];
      CHECK(lead.num == ref.num);
      CHECK(lead.den == ref.den);
    }
    const auto at0 = eval_b_taylor(phase_fitted(i), 0.0);
    CHECK(at0 == classical_coefficients().b);
  }
}

TEST_CASE("Taylor series: printed PF-D1 b_1 at v = 0.02", "[coeffs]") {
  const double v = 0.02, v2 = v * v;
  const double expected = 90987349.0 / 53222400 - 16301796103.0 / 145297152000 * v2 +
                          1532031563.0 / 268240896000 * v2 * v2 -
                          31987133939.0 / 592812380160000 * v2 * v2 * v2 +
                          5466168990203.0 / 2838385676206080000 * v2 * v2 * v2 * v2;
  CHECK_THAT(eval_b_taylor(MethodId::PFD1, v)[1], WithinRel(expected, 1e-15));
}

TEST_CASE("Taylor branch range", "[coeffs]") {
  CHECK_THROWS_AS(eval_b_taylor(MethodId::PFD2, 0.0501), RangeError);
  CHECK_NOTHROW(eval_b_taylor(MethodId::PFD2, 0.05));
  CHECK_NOTHROW(eval_b_taylor(MethodId::PFD2, -0.03));
  CHECK_THROWS_AS(eval_b_taylor(MethodId::Classical, 0.01), std::invalid_argument);
}

TEST_CASE("closed forms against the arbitrary-precision oracle", "[coeffs]") {
  // b_1..b_6 from solving the defining linear system in 50-digit arithmetic.
  struct Case {
    MethodId m;
    double v;
    std::array<double, 6> b;
  };
  const Case cases[] = {
      {MethodId::PFD5, 0.8,
       {1.4947549275019697323, -2.4972667173846813657, 7.9833112464045310347,
        -12.603521701285354903, 20.871544486921095123, -21.500699253542838134}},
      {MethodId::PFD2, 1.2,
       {1.4808345315878530745, -2.3248266513611555063, 7.2332606297054673394,
        -10.732257330402347636, 17.756046786342345728, -17.826115931744325999}},
      {MethodId::PFD0, 0.3,
       {1.7045478783209913, -4.2637054697178495079, 15.042581111746195801,
        -29.99627119216974965, 49.957445320424046014, -55.889195297207267915}},
  };
  for (const auto& c : cases) {
    const auto b = eval_b_closed(c.m, c.v);
    for (int j = 1; j <= 6; ++j) {
      INFO(method_name(c.m) << " v=" << c.v << " j=" << j);
      CHECK_THAT(b[j], WithinAbs(c.b[j - 1], 1e-12));
    }
  }
}

TEST_CASE("closed form and Taylor agree where both are valid", "[coeffs]") {
  for (auto m : kFitted) {
    for (double v : {0.01, 0.02, 0.04, 0.05}) {
      INFO(method_name(m) << " v=" << v);
      CHECK(max_diff(eval_b_closed(m, v), eval_b_taylor(m, v)) < (v < 0.05 ? 1e-13 : 5e-13));
    }
  }
}

TEST_CASE("closed form tends to the classical method", "[coeffs]") {
  const auto classical = classical_coefficients().b;
  for (auto m : kFitted) {
    INFO(method_name(m));
    CHECK(max_diff(eval_b_closed(m, 1e-6), classical) < 1e-10);
    // Leading deviation is the printed v^2 term; its size is below 1e-6 for all variants.
    const auto t = eval_b_taylor(m, 1e-4);
    for (int j = 1; j <= kHalf; ++j) {
      const double lead = taylor_terms(elimination_order(m), j)[1].value() * 1e-8;
      CHECK_THAT(t[j] - classical[j], WithinAbs(lead, 1e-14));
    }
    CHECK(max_diff(t, classical) < 1e-6);
  }
}

TEST_CASE("closed form domain", "[coeffs]") {
  CHECK_THROWS_AS(eval_b_closed(MethodId::PFD0, 0.0), DomainError);
  CHECK_THROWS_AS(eval_b_closed(MethodId::PFD0, -0.5), DomainError);
  CHECK_THROWS_AS(eval_b_closed(MethodId::PFD0, 2 * M_PI), DomainError);
  CHECK_THROWS_AS(eval_b_closed(MethodId::PFD3, M_PI), DomainError);
  CHECK_NOTHROW(eval_b_closed(MethodId::PFD0, M_PI));
  CHECK_THROWS_AS(eval_b_closed(MethodId::PFD1, 1e-40), DomainError);
  CHECK_THROWS_AS(eval_b_closed(MethodId::Classical, 0.5), std::invalid_argument);
}

TEST_CASE("precision policy validation", "[coeffs]") {
  PrecisionPolicy p;
  CHECK_NOTHROW(p.validate());
  p.extended_digits = 20;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = {};
  p.taylor_threshold = 1.5;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  CHECK(closed_form_digits(0.01, {}) == 30 + 28 + 6);
  CHECK(closed_form_digits(2.0, {}) == 36);
}

TEST_CASE("coefficient dispatch", "[coeffs]") {
  const auto c = coefficients(MethodId::Classical, 17.3);
  CHECK(c.source == CoefficientSource::Constant);
  CHECK(c.b == classical_coefficients().b);

  CHECK(coefficients(MethodId::PFD2, 0.049).source == CoefficientSource::Taylor);
  CHECK(coefficients(MethodId::PFD2, 0.051).source == CoefficientSource::ClosedForm);
  PrecisionPolicy wide;
  wide.taylor_threshold = 0.06;
  for (auto m : kFitted) {
    INFO(method_name(m));
    // Each point evaluated on both branches: the switch itself introduces no jump.
    for (double v : {0.049, 0.051}) {
      CHECK(max_diff(eval_b_taylor(m, v, wide), eval_b_closed(m, v)) < 1e-12);
    }
    // Across the switch the dispatched values move exactly as one smooth series would.
    const auto lo = coefficients(m, 0.049).b;
    const auto hi = coefficients(m, 0.051).b;
    const auto smooth_hi = eval_b_taylor(m, 0.051, wide);
    const auto smooth_lo = eval_b_taylor(m, 0.049, wide);
    for (int j = 0; j <= kSteps; ++j) {
      CHECK_THAT(hi[j] - lo[j], WithinAbs(smooth_hi[j] - smooth_lo[j], 1e-12));
    }
  }

  const auto d4 = coefficients(MethodId::PFD4, 1.2);
  CHECK(d4.source == CoefficientSource::ClosedForm);
  for (int j = 0; j <= kSteps; ++j) CHECK(d4.b[j] == d4.b[kSteps - j]);
  CHECK_THROWS_AS(coefficients(MethodId::PFD1, -0.1), DomainError);
}

TEST_CASE("symmetry and consistency over a v sweep", "[coeffs][property]") {
  for (auto m : kFitted) {
    for (int k = 1; k <= 40; ++k) {
      const double v = 0.05 * k;
      const auto c = coefficients(m, v);
      INFO(method_name(m) << " v=" << v);
      CHECK(c.b[0] == 0.0);
      for (int j = 0; j <= kSteps; ++j) REQUIRE(c.b[j] == c.b[kSteps - j]);
      CHECK_THAT(error_constant(c, 0), WithinAbs(0.0, 1e-12));
      CHECK_THAT(error_constant(c, 1), WithinAbs(0.0, 1e-12));
      // PF-D5 spends every free coefficient on the phase lag, so its consistency
      // defect is O(v^12) rather than exactly zero.
      const double c2_tol = m == MethodId::PFD5 ? std::pow(v, 12) + 1e-13 : 1e-9;
      CHECK_THAT(error_constant(c, 2), WithinAbs(0.0, c2_tol));
    }
  }
}

TEST_CASE("extended coefficient conversion", "[coeffs]") {
  const auto b = b_as<Float50>(MethodId::Classical, 0.0);
  const Float50 exact = Float50(90987349) / 53222400;
  CHECK(b[1] == exact);
  CHECK(b[11] == exact);
  const auto d3 = b_as<Float50>(MethodId::PFD3, 0.7);
  CHECK(static_cast<double>(d3[4]) == coefficients(MethodId::PFD3, 0.7).b[4]);
}
