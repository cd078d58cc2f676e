#pragma once

#include <cmath>

namespace phasefit::detail {

template <class Real>
Real sec(const Real& x) {
  using std::cos;
  return 1 / cos(x);
}

template <class Real>
Real csc(const Real& x) {
  using std::sin;
  return 1 / sin(x);
}

template <class Real>
Real cot(const Real& x) {
  using std::tan;
  return 1 / tan(x);
}

template <class Real>
Real pw(const Real& x, int n) {
  Real r = 1;
  Real base = x;
  for (unsigned e = static_cast<unsigned>(n); e != 0; e >>= 1) {
    if (e & 1u) r *= base;
    base *= base;
  }
  return r;
}

}  // namespace phasefit::detail
