#pragma once

#include <cstdint>
#include <numeric>

namespace phasefit {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr double value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  constexpr Rational reduced() const {
    std::int64_t g = std::gcd(num, den);
    if (g == 0) return {0, 1};
    std::int64_t sign = den < 0 ? -1 : 1;
    return {sign * (num / g), sign * (den / g)};
  }

  constexpr bool is_reduced() const {
    return den > 0 && std::gcd(num, den) == 1;
  }
};

// Value equality by cross-multiplication; exact for any int64 pair.
constexpr bool same_value(const Rational& x, const Rational& y) {
  return static_cast<__int128>(x.num) * y.den == static_cast<__int128>(y.num) * x.den;
}

constexpr bool operator==(const Rational& x, const Rational& y) {
  return same_value(x, y);
}

}  // namespace phasefit
