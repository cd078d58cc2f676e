#include "phasefit/method.hpp"

#include <stdexcept>

namespace phasefit {

namespace {
constexpr std::array<std::string_view, 7> kNames = {"classical", "pf-d0", "pf-d1", "pf-d2",
                                                    "pf-d3",     "pf-d4", "pf-d5"};
}

std::string_view method_name(MethodId m) {
  return kNames[static_cast<std::size_t>(m)];
}

MethodId parse_method(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<MethodId>(i);
  }
  throw std::invalid_argument("unknown method '" + std::string(name) +
                              "' (expected classical, pf-d0 ... pf-d5)");
}

}  // namespace phasefit
