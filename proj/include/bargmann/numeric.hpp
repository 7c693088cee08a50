#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "bargmann/quadrature.hpp"
#include "bargmann/sampled_symbol.hpp"

namespace bargmann {

/// A symbol returned a non-finite value at a quadrature node.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, std::vector<std::complex<double>> node)
      : std::runtime_error(what), node_(std::move(node)) {}
  const std::vector<std::complex<double>>& node() const { return node_; }

 private:
  std::vector<std::complex<double>> node_;
};

/// Heat transform f^(t)(z) = pi^{-n} int f(sqrt(t) w + z) exp(-|w|^2) dw by tensor
/// Gauss-Hermite quadrature over the 2n real coordinates.
std::complex<double> heat_numeric(const SampledSymbol& f, Point z, double t, const QuadratureRule& rule);

/// Largest tensor size (nodes) sharp_integral_numeric accepts.
inline constexpr double kMaxSharpNodes = 1e8;

/// The double integral
///   pi^{-2n} int int f(sqrt(t) v + z) g(sqrt(t) w + z) exp(-vbar.w - |v|^2 - |w|^2) dv dw,
/// which equals (f^(t) #_t g^(t))(z). Gauss-Hermite over 4n real coordinates with the
/// complex kernel exp(-vbar.w) evaluated per node pair. Throws std::invalid_argument
/// when the tensor would exceed kMaxSharpNodes.
std::complex<double> sharp_integral_numeric(const SampledSymbol& f, const SampledSymbol& g, Point z, double t,
                                            const QuadratureRule& rule);

}  // namespace bargmann
