#include "bargmann/numeric.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace bargmann {

namespace {

using cd = std::complex<double>;

void check_args(const SampledSymbol& f, Point z, double t) {
  if (!(t > 0)) throw std::invalid_argument("quadrature: t must be positive");
  if (z.size() != f.dimension()) throw std::invalid_argument("quadrature: point dimension mismatch");
}

// Samples f at sqrt(t) * w + z for every grid point w.
std::vector<cd> sample(const SampledSymbol& f, const ComplexGrid& grid, Point z, double t) {
  const std::size_t n = grid.n;
  const double s = std::sqrt(t);
  std::vector<cd> values(grid.size());
  std::vector<cd> x(n);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    for (std::size_t j = 0; j < n; ++j) x[j] = s * grid.points[k * n + j] + z[j];
    const cd v = f(x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::ostringstream os;
      os << "symbol is not finite at node (";
      for (std::size_t j = 0; j < n; ++j) os << (j ? ", " : "") << x[j];
      os << ")";
      throw QuadratureError(os.str(), x);
    }
    values[k] = v;
  }
  return values;
}

}  // namespace

cd heat_numeric(const SampledSymbol& f, Point z, double t, const QuadratureRule& rule) {
  check_args(f, z, t);
  const ComplexGrid grid = complex_tensor_grid(rule, f.dimension());
  const std::vector<cd> values = sample(f, grid, z, t);
  CompensatedSum sum;
  for (std::size_t k = 0; k < grid.size(); ++k) sum.add(grid.weights[k] * values[k]);
  return sum.value() / std::pow(std::numbers::pi, static_cast<double>(f.dimension()));
}

cd sharp_integral_numeric(const SampledSymbol& f, const SampledSymbol& g, Point z, double t,
                          const QuadratureRule& rule) {
  check_args(f, z, t);
  check_args(g, z, t);
  const std::size_t n = f.dimension();
  const double per_side = std::pow(static_cast<double>(rule.size()), 2.0 * static_cast<double>(n));
  if (per_side * per_side > kMaxSharpNodes) {
    throw std::invalid_argument("sharp_integral_numeric: tensor grid too large for n = " + std::to_string(n) +
                                ", Q = " + std::to_string(rule.size()));
  }
  const ComplexGrid grid = complex_tensor_grid(rule, n);
  std::vector<cd> fv = sample(f, grid, z, t);
  std::vector<cd> gv = sample(g, grid, z, t);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    fv[k] *= grid.weights[k];
    gv[k] *= grid.weights[k];
  }

  CompensatedSum total;
  for (std::size_t a = 0; a < grid.size(); ++a) {
    if (fv[a] == 0.0) continue;
    const cd* v = &grid.points[a * n];
    CompensatedSum inner;
    for (std::size_t b = 0; b < grid.size(); ++b) {
      const cd* w = &grid.points[b * n];
      cd exponent = 0;
      for (std::size_t j = 0; j < n; ++j) exponent -= std::conj(v[j]) * w[j];
      inner.add(gv[b] * std::exp(exponent));
    }
    total.add(fv[a] * inner.value());
  }
  return total.value() / std::pow(std::numbers::pi, 2.0 * static_cast<double>(n));
}

}  // namespace bargmann
