#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "phasefit/method.hpp"

namespace phasefit::cli {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2 };

// Full command line entry; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string coeffs_csv(MethodId method, double v);
std::string phaselag_csv(MethodId method, double v, double s_from, double s_to, int n);
std::string solve_csv(MethodId method, double E, double h);

struct AccuracyRow {
  MethodId method;
  double E;
  double h;
  std::int64_t steps;
  double delta;
  double digits;
};

// One row per (method, h), methods-major in the given order. h_ladder must be
// nonempty and strictly decreasing.
std::vector<AccuracyRow> accuracy_curve(const std::vector<MethodId>& methods, double E,
                                        const std::vector<double>& h_ladder);
std::string accuracy_csv(const std::vector<AccuracyRow>& rows);

}  // namespace phasefit::cli
