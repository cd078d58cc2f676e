#include "cli/commands.hpp"

#include <filesystem>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "phasefit/coefficients.hpp"
#include "phasefit/errors.hpp"
#include "phasefit/io.hpp"
#include "phasefit/phase_lag.hpp"
#include "phasefit/schrodinger.hpp"
#include "phasefit/stability.hpp"

namespace phasefit::cli {

namespace {

constexpr double kDomainEnd = 15.0;

std::string num(double x) { return format_number(x, 17); }

std::vector<std::string> method_names() {
  std::vector<std::string> names;
  for (auto m : kAllMethods) names.emplace_back(method_name(m));
  return names;
}

// Writes to the file atomically, or to `out` when no path was given.
void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    write_file_atomic(path, content);
  }
}

GridFormat grid_format(const std::string& requested, const std::string& path) {
  if (requested == "pgm") return GridFormat::Pgm;
  if (requested == "csv") return GridFormat::Csv;
  return std::filesystem::path(path).extension() == ".pgm" ? GridFormat::Pgm : GridFormat::Csv;
}

}  // namespace

std::string coeffs_csv(MethodId method, double v) {
  const auto c = coefficients(method, v);
  std::string out = "j,b\n";
  for (int j = 0; j <= kSteps; ++j) out += std::to_string(j) + "," + num(c.b[j]) + "\n";
  return out;
}

std::string phaselag_csv(MethodId method, double v, double s_from, double s_to, int n) {
  if (n < 2) throw std::invalid_argument("--n must be >= 2");
  if (!(s_to > s_from)) throw std::invalid_argument("--s-to must exceed --s-from");
  const auto c = coefficients(method, v);
  std::string out = "s,pl\n";
  for (int i = 0; i < n; ++i) {
    const double s = i == n - 1 ? s_to : s_from + i * ((s_to - s_from) / (n - 1));
    out += num(s) + "," + num(phase_lag(c, s)) + "\n";
  }
  return out;
}

std::string solve_csv(MethodId method, double E, double h) {
  const auto r = run_benchmark(method, E, h);
  return "method,E,h,delta,digits\n" + std::string(method_name(method)) + "," + num(E) + "," +
         num(h) + "," + num(r.delta) + "," + num(r.digits) + "\n";
}

std::vector<AccuracyRow> accuracy_curve(const std::vector<MethodId>& methods, double E,
                                        const std::vector<double>& h_ladder) {
  if (methods.empty()) throw std::invalid_argument("accuracy curve needs at least one method");
  if (h_ladder.empty()) throw std::invalid_argument("accuracy curve needs a nonempty h ladder");
  for (std::size_t i = 1; i < h_ladder.size(); ++i) {
    if (!(h_ladder[i] < h_ladder[i - 1])) {
      throw std::invalid_argument("h ladder must be strictly decreasing");
    }
  }
  std::vector<AccuracyRow> rows;
  for (auto m : methods) {
    for (double h : h_ladder) {
      const auto r = run_benchmark(m, E, h);
      rows.push_back({m, E, h, step_count(kDomainEnd, h), r.delta, r.digits});
    }
  }
  return rows;
}

std::string accuracy_csv(const std::vector<AccuracyRow>& rows) {
  std::string out = "method,E,h,steps,delta,digits\n";
  for (const auto& r : rows) {
    out += std::string(method_name(r.method)) + "," + num(r.E) + "," + num(r.h) + "," +
           std::to_string(r.steps) + "," + num(r.delta) + "," + num(r.digits) + "\n";
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Phase-fitted 12-step symmetric multistep methods"};
  app.require_subcommand(1);
  const auto names = method_names();
  auto method_check = CLI::IsMember(names);

  std::string method = "classical";
  std::string out_path;
  std::string format;

  auto* coeffs_cmd = app.add_subcommand("coeffs", "Print the 13 b-coefficients of a method at v");
  double v = 0.0;
  coeffs_cmd->add_option("--method", method, "classical, pf-d0 ... pf-d5")->required()->check(method_check);
  coeffs_cmd->add_option("--v", v, "Fitting parameter v = omega h")->check(CLI::NonNegativeNumber);
  coeffs_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv"}));
  coeffs_cmd->add_option("--out", out_path, "Output file (default stdout)");

  auto* pl_cmd = app.add_subcommand("phaselag", "Sweep the phase-lag function over s");
  double s_from = 0.0, s_to = 2.0;
  int n = 400;
  pl_cmd->add_option("--method", method, "classical, pf-d0 ... pf-d5")->required()->check(method_check);
  pl_cmd->add_option("--v", v, "Fitting parameter v")->check(CLI::NonNegativeNumber);
  pl_cmd->add_option("--s-from", s_from, "First s")->capture_default_str();
  pl_cmd->add_option("--s-to", s_to, "Last s")->capture_default_str();
  pl_cmd->add_option("--n", n, "Number of samples")->capture_default_str();
  pl_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv"}));
  pl_cmd->add_option("--out", out_path, "Output file (default stdout)");

  auto* map_cmd = app.add_subcommand("stability-map", "Raster the s-v stability region");
  GridWindow window;
  int grid_n = 300, ns = 0, nv = 0, threads = 1;
  double tol = kStabilityTol;
  map_cmd->add_option("--method", method, "classical, pf-d0 ... pf-d5")->required()->check(method_check);
  map_cmd->add_option("--s-min", window.s_min, "Lower s bound (exclusive)")->capture_default_str();
  map_cmd->add_option("--s-max", window.s_max, "Upper s bound")->capture_default_str();
  map_cmd->add_option("--v-min", window.v_min, "Lower v bound (exclusive)")->capture_default_str();
  map_cmd->add_option("--v-max", window.v_max, "Upper v bound")->capture_default_str();
  map_cmd->add_option("--n", grid_n, "Cells per axis")->capture_default_str();
  map_cmd->add_option("--ns", ns, "Cells along s (overrides --n)");
  map_cmd->add_option("--nv", nv, "Cells along v (overrides --n)");
  map_cmd->add_option("--tol", tol, "Root modulus tolerance")->capture_default_str();
  map_cmd->add_option("--threads", threads, "Worker threads")->capture_default_str();
  map_cmd->add_option("--format", format, "csv or pgm (default from --out extension)")
      ->check(CLI::IsMember({"csv", "pgm"}));
  map_cmd->add_option("--out", out_path, "Output file (default stdout)");

  auto* solve_cmd = app.add_subcommand("solve", "Run the Woods-Saxon phase-shift benchmark");
  double energy = 0.0, steps_per_unit = 0.0;
  std::string trajectory_path;
  solve_cmd->add_option("--method", method, "classical, pf-d0 ... pf-d5")->required()->check(method_check);
  solve_cmd->add_option("--energy", energy, "Energy E > 50")->required();
  solve_cmd->add_option("--steps-per-unit", steps_per_unit, "1 / h")->required()->check(CLI::PositiveNumber);
  solve_cmd->add_option("--out", out_path, "Result CSV (default stdout)");
  solve_cmd->add_option("--trajectory", trajectory_path, "Also write the x,y trajectory CSV");

  auto* curve_cmd = app.add_subcommand("accuracy-curve", "Digits versus step size for several methods");
  std::vector<std::string> methods = names;
  std::vector<std::int64_t> steps = {120, 240, 480};
  curve_cmd->add_option("--methods", methods, "Comma-separated methods (default all)")
      ->delimiter(',')
      ->check(method_check);
  curve_cmd->add_option("--energy", energy, "Energy E > 50")->required();
  curve_cmd->add_option("--steps", steps, "Comma-separated step counts on [0, 15]; h = 15 / steps")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  curve_cmd->add_option("--out", out_path, "Output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*coeffs_cmd) {
      emit(out_path, coeffs_csv(parse_method(method), v), out);
    } else if (*pl_cmd) {
      emit(out_path, phaselag_csv(parse_method(method), v, s_from, s_to, n), out);
    } else if (*map_cmd) {
      const int cols = ns > 0 ? ns : grid_n;
      const int rows = nv > 0 ? nv : grid_n;
      const auto grid = stability_grid(parse_method(method), window, cols, rows, tol, threads);
      emit(out_path, format_grid(grid, grid_format(format, out_path)), out);
      if (grid.failures > 0) err << "warning: " << grid.failures << " cells failed and were marked unstable\n";
    } else if (*solve_cmd) {
      const MethodId m = parse_method(method);
      const double h = 1.0 / steps_per_unit;
      if (!trajectory_path.empty()) {
        const auto t = solve_radial(m, energy, h);
        std::string csv = "x,y\n";
        for (std::size_t i = 0; i < t.xs.size(); ++i) csv += num(t.xs[i]) + "," + num(t.ys[i]) + "\n";
        write_file_atomic(trajectory_path, csv);
      }
      emit(out_path, solve_csv(m, energy, h), out);
    } else if (*curve_cmd) {
      std::vector<MethodId> ms;
      for (const auto& name : methods) ms.push_back(parse_method(name));
      std::vector<double> ladder;
      for (auto s : steps) ladder.push_back(kDomainEnd / static_cast<double>(s));
      emit(out_path, accuracy_csv(accuracy_curve(ms, energy, ladder)), out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}

}  // namespace phasefit::cli
