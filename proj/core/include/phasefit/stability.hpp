#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "phasefit/coefficients.hpp"

namespace phasefit {

struct CharPolynomial {
  std::array<double, kSteps + 1> c{};  // sum c_k z^k
};

CharPolynomial characteristic_polynomial(const CoefficientSet& coeffs, double s);
CharPolynomial characteristic_polynomial(MethodId method, double s, double v,
                                         const PrecisionPolicy& policy = {});

using RootSet = std::vector<std::complex<double>>;

// Companion-matrix eigenvalues refined by Newton. Every root satisfies
// |p(z)| <= 1e-8 * sum |c_k| |z|^k, otherwise ConvergenceFailure.
RootSet roots(const CharPolynomial& p);

double max_root_modulus(const CharPolynomial& p);

inline constexpr double kStabilityTol = 1e-8;

bool is_stable(MethodId method, double s, double v, double tol = kStabilityTol,
               const PrecisionPolicy& policy = {});

// |arg| of the characteristic root nearest e^{is}: the method's numerical
// frequency lambda(s).
double principal_root_argument(MethodId method, double s, double v,
                               const PrecisionPolicy& policy = {});

struct GridWindow {
  double s_min = 0.0;
  double s_max = 1.5;
  double v_min = 0.0;
  double v_max = 1.5;
};

struct StabilityGrid {
  GridWindow window;
  int ns = 0;
  int nv = 0;
  double tol = kStabilityTol;
  std::vector<std::uint8_t> cells;  // cells[q * ns + p]: s index p, v index q
  int failures = 0;                 // cells forced unstable by a numerical failure

  // Samples sit on the upper cell edges: s_p = s_min + (p + 1) ds.
  double s_at(int p) const;
  double v_at(int q) const;
  bool stable(int p, int q) const { return cells[static_cast<std::size_t>(q) * ns + p] != 0; }
};

// threads <= 1 evaluates sequentially; any thread count gives the same raster.
StabilityGrid stability_grid(MethodId method, const GridWindow& window, int ns, int nv,
                             double tol = kStabilityTol, int threads = 1,
                             const PrecisionPolicy& policy = {});

enum class GridFormat { Csv, Pgm };

std::string format_grid(const StabilityGrid& grid, GridFormat format);
void write_grid(const StabilityGrid& grid, const std::string& path, GridFormat format);

// Parses the CSV rendering back into a grid (window reconstructed from samples).
StabilityGrid parse_grid_csv(const std::string& text);

}  // namespace phasefit
