#include <stdexcept>

#include "closed_forms.hpp"
#include "phasefit/extended.hpp"

namespace phasefit {

template <class Real>
std::array<Real, kHalf> closed_form_b(MethodId method, const Real& v) {
  switch (method) {
    case MethodId::PFD0: return detail::pfd0_b(v);
    case MethodId::PFD1: return detail::pfd1_b(v);
    case MethodId::PFD2: return detail::pfd2_b(v);
    case MethodId::PFD3: return detail::pfd3_b(v);
    case MethodId::PFD4: return detail::pfd4_b(v);
    case MethodId::PFD5: return detail::pfd5_b(v);
    case MethodId::Classical: break;
  }
  throw std::invalid_argument("closed form requested for the classical method");
}

template std::array<double, kHalf> closed_form_b(MethodId, const double&);
template std::array<Float50, kHalf> closed_form_b(MethodId, const Float50&);
template std::array<Float100, kHalf> closed_form_b(MethodId, const Float100&);
template std::array<Float200, kHalf> closed_form_b(MethodId, const Float200&);
template std::array<Float400, kHalf> closed_form_b(MethodId, const Float400&);

}  // namespace phasefit
