#pragma once

#include <span>

#include "phasefit/rational.hpp"

namespace phasefit::detail {

std::span<const Rational> taylor_terms(int order, int j);

}  // namespace phasefit::detail
