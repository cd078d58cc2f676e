#pragma once

#include <array>
#include <string>
#include <string_view>

namespace phasefit {

enum class MethodId { Classical, PFD0, PFD1, PFD2, PFD3, PFD4, PFD5 };

inline constexpr std::array<MethodId, 7> kAllMethods = {
    MethodId::Classical, MethodId::PFD0, MethodId::PFD1, MethodId::PFD2,
    MethodId::PFD3,      MethodId::PFD4, MethodId::PFD5};

// Number of phase-lag derivatives eliminated at s = v; -1 for Classical.
constexpr int elimination_order(MethodId m) {
  return static_cast<int>(m) - 1;
}

constexpr MethodId phase_fitted(int order) {
  return static_cast<MethodId>(order + 1);
}

// "classical", "pf-d0" ... "pf-d5"
std::string_view method_name(MethodId m);

// Inverse of method_name; throws std::invalid_argument on unknown names.
MethodId parse_method(std::string_view name);

}  // namespace phasefit
