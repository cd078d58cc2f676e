#include "phasefit/stability.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <Eigen/Eigenvalues>

#include "phasefit/errors.hpp"
#include "phasefit/io.hpp"
#include "phasefit/phase_lag.hpp"

namespace phasefit {

namespace {

using cplx = std::complex<double>;

void horner(const CharPolynomial& p, cplx z, cplx& value, cplx& deriv, double& magnitude) {
  value = p.c[kSteps];
  deriv = 0.0;
  magnitude = std::abs(p.c[kSteps]);
  const double r = std::abs(z);
  for (int k = kSteps - 1; k >= 0; --k) {
    deriv = deriv * z + value;
    value = value * z + p.c[k];
    magnitude = magnitude * r + std::abs(p.c[k]);
  }
}

}  // namespace

CharPolynomial characteristic_polynomial(const CoefficientSet& coeffs, double s) {
  const auto A = char_coeffs<double>(coeffs.b, s);
  CharPolynomial p;
  p.c[kHalf] = A[0];
  for (int j = 1; j <= kHalf; ++j) {
    p.c[kHalf + j] = A[j];
    p.c[kHalf - j] = A[j];
  }
  return p;
}

CharPolynomial characteristic_polynomial(MethodId method, double s, double v,
                                         const PrecisionPolicy& policy) {
  return characteristic_polynomial(coefficients(method, v, policy), s);
}

RootSet roots(const CharPolynomial& p) {
  const double lead = p.c[kSteps];
  if (lead == 0.0) throw DomainError("characteristic polynomial has zero leading coefficient");

  Eigen::Matrix<double, kSteps, kSteps> companion = Eigen::Matrix<double, kSteps, kSteps>::Zero();
  for (int i = 1; i < kSteps; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < kSteps; ++i) companion(i, kSteps - 1) = -p.c[i] / lead;

  Eigen::EigenSolver<Eigen::Matrix<double, kSteps, kSteps>> solver(companion, false);
  if (solver.info() != Eigen::Success) throw ConvergenceFailure("companion eigenvalue solver failed");

  RootSet out;
  out.reserve(kSteps);
  for (int i = 0; i < kSteps; ++i) {
    cplx z = solver.eigenvalues()[i];
    cplx val, der;
    double mag;
    horner(p, z, val, der, mag);
    for (int it = 0; it < 5 && std::abs(val) > 0.0 && std::abs(der) > 0.0; ++it) {
      const cplx trial = z - val / der;
      cplx tval, tder;
      double tmag;
      horner(p, trial, tval, tder, tmag);
      if (!(std::abs(tval) < std::abs(val))) break;
      z = trial;
      val = tval;
      der = tder;
      mag = tmag;
    }
    if (!(std::abs(val) <= 1e-8 * mag)) {
      throw ConvergenceFailure("characteristic root failed the backward-error check");
    }
    out.push_back(z);
  }
  return out;
}

double max_root_modulus(const CharPolynomial& p) {
  double m = 0.0;
  for (const auto& z : roots(p)) m = std::max(m, std::abs(z));
  return m;
}

bool is_stable(MethodId method, double s, double v, double tol, const PrecisionPolicy& policy) {
  if (!(s > 0)) throw DomainError("is_stable needs s > 0");
  return max_root_modulus(characteristic_polynomial(method, s, v, policy)) <= 1.0 + tol;
}

double principal_root_argument(MethodId method, double s, double v, const PrecisionPolicy& policy) {
  const auto zs = roots(characteristic_polynomial(method, s, v, policy));
  const cplx target = std::polar(1.0, s);
  const auto best = std::min_element(zs.begin(), zs.end(), [&](cplx a, cplx b) {
    return std::abs(a - target) < std::abs(b - target);
  });
  return std::abs(std::arg(*best));
}

double StabilityGrid::s_at(int p) const {
  return window.s_min + (p + 1) * ((window.s_max - window.s_min) / ns);
}

double StabilityGrid::v_at(int q) const {
  return window.v_min + (q + 1) * ((window.v_max - window.v_min) / nv);
}

StabilityGrid stability_grid(MethodId method, const GridWindow& window, int ns, int nv, double tol,
                             int threads, const PrecisionPolicy& policy) {
  if (ns < 1 || nv < 1) throw std::invalid_argument("stability grid needs ns, nv >= 1");
  if (!(window.s_max > window.s_min) || !(window.v_max > window.v_min) || window.s_min < 0 ||
      window.v_min < 0) {
    throw std::invalid_argument("stability grid needs 0 <= min < max on both axes");
  }
  StabilityGrid g;
  g.window = window;
  g.ns = ns;
  g.nv = nv;
  g.tol = tol;
  g.cells.assign(static_cast<std::size_t>(ns) * nv, 0);
  std::vector<int> row_failures(nv, 0);

  auto do_row = [&](int q) {
    std::uint8_t* row = g.cells.data() + static_cast<std::size_t>(q) * ns;
    CoefficientSet c;
    try {
      c = coefficients(method, g.v_at(q), policy);
    } catch (const Error&) {
      row_failures[q] = ns;
      return;
    }
    for (int p = 0; p < ns; ++p) {
      try {
        row[p] = max_root_modulus(characteristic_polynomial(c, g.s_at(p))) <= 1.0 + tol;
      } catch (const Error&) {
        row[p] = 0;
        ++row_failures[q];
      }
    }
  };

  const int workers = std::clamp(threads, 1, nv);
  if (workers == 1) {
    for (int q = 0; q < nv; ++q) do_row(q);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int q = w; q < nv; q += workers) do_row(q);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (int f : row_failures) g.failures += f;
  return g;
}

std::string format_grid(const StabilityGrid& grid, GridFormat format) {
  std::string out;
  if (format == GridFormat::Csv) {
    out = "s,v,stable\n";
    for (int q = 0; q < grid.nv; ++q) {
      const std::string v = format_number(grid.v_at(q), 9);
      for (int p = 0; p < grid.ns; ++p) {
        out += format_number(grid.s_at(p), 9);
        out += ',';
        out += v;
        out += grid.stable(p, q) ? ",1\n" : ",0\n";
      }
    }
    return out;
  }
  // First image row is the largest v so the raster reads like a plot.
  out = "P2\n" + std::to_string(grid.ns) + " " + std::to_string(grid.nv) + "\n255\n";
  for (int q = grid.nv - 1; q >= 0; --q) {
    for (int p = 0; p < grid.ns; ++p) {
      if (p) out += ' ';
      out += grid.stable(p, q) ? "255" : "0";
    }
    out += '\n';
  }
  return out;
}

void write_grid(const StabilityGrid& grid, const std::string& path, GridFormat format) {
  write_file_atomic(path, format_grid(grid, format));
}

StabilityGrid parse_grid_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "s,v,stable") {
    throw std::runtime_error("stability CSV: missing header 's,v,stable'");
  }
  std::vector<double> ss, vs;
  std::vector<std::uint8_t> flags;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b, c;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',') || !std::getline(row, c)) {
      throw std::runtime_error("stability CSV: malformed row '" + line + "'");
    }
    if (c != "0" && c != "1") throw std::runtime_error("stability CSV: flag must be 0 or 1");
    ss.push_back(std::stod(a));
    vs.push_back(std::stod(b));
    flags.push_back(c == "1");
  }
  if (flags.empty()) throw std::runtime_error("stability CSV: no cells");
  std::size_t ns = 1;
  while (ns < vs.size() && vs[ns] == vs[0]) ++ns;
  if (flags.size() % ns != 0) throw std::runtime_error("stability CSV: ragged grid");

  StabilityGrid g;
  g.ns = static_cast<int>(ns);
  g.nv = static_cast<int>(flags.size() / ns);
  g.cells = std::move(flags);
  const double ds = ns > 1 ? ss[1] - ss[0] : ss[0];
  const double dv = g.nv > 1 ? vs[ns] - vs[0] : vs[0];
  g.window = {ss[0] - ds, ss[ns - 1], vs[0] - dv, vs.back()};
  return g;
}

}  // namespace phasefit
