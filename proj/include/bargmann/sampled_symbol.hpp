#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bargmann/formal_symbol.hpp"
#include "bargmann/multiindex.hpp"

namespace bargmann {

using Point = std::span<const std::complex<double>>;
using SymbolFunction = std::function<std::complex<double>(Point)>;

/// Returns d^hol dbar^antihol of the symbol when it is known analytically.
using DerivativeProvider =
    std::function<std::optional<SymbolFunction>(const MultiIndex& hol, const MultiIndex& antihol)>;

/// Step of the central finite differences used when no analytic derivative exists.
inline constexpr double kFiniteDifferenceStep = 1e-5;

/// Black-box smooth symbol on C^n.
class SampledSymbol {
 public:
  SampledSymbol(std::size_t n, SymbolFunction value, DerivativeProvider derivative = {},
                std::optional<double> sup_bound = std::nullopt, std::string label = {});

  std::size_t dimension() const { return n_; }
  std::complex<double> operator()(Point z) const { return value_(z); }
  const SymbolFunction& function() const { return value_; }
  const DerivativeProvider& derivative_provider() const { return derivative_; }
  std::optional<double> sup_bound() const { return sup_bound_; }
  const std::string& label() const { return label_; }

  /// d^hol dbar^antihol f. Analytic when the provider supplies it, otherwise central
  /// differences in the 2n real coordinates; finite differences are limited to a total
  /// order of 2 and throw std::domain_error beyond that.
  SampledSymbol derivative(const MultiIndex& hol, const MultiIndex& antihol) const;

  /// Finite-difference order already spent producing this symbol.
  int finite_difference_order() const { return fd_order_; }

 private:
  std::size_t n_;
  SymbolFunction value_;
  DerivativeProvider derivative_;
  std::optional<double> sup_bound_;
  std::string label_;
  int fd_order_ = 0;
};

/// Products and sums keep analytic derivatives (Leibniz rule) when both factors have them.
SampledSymbol operator*(const SampledSymbol& f, const SampledSymbol& g);
SampledSymbol operator+(const SampledSymbol& f, const SampledSymbol& g);
SampledSymbol operator-(const SampledSymbol& f, const SampledSymbol& g);
SampledSymbol scaled(const SampledSymbol& f, std::complex<double> c);

/// Polynomial symbol presented as a black box, derivatives taken exactly.
/// Throws std::invalid_argument if f depends on t (has s powers).
SampledSymbol sampled_from_formal(const FormalSymbol& f);

// Built-in C^infinity_b families.

/// amplitude * exp(i sum_j (a_j Re z_j + b_j Im z_j)).
SampledSymbol plane_wave(std::size_t n, std::vector<double> a, std::vector<double> b,
                         std::complex<double> amplitude = 1.0);
SampledSymbol cos_re(std::size_t n, std::size_t j, double frequency = 1.0);
SampledSymbol sin_re(std::size_t n, std::size_t j, double frequency = 1.0);
SampledSymbol cos_im(std::size_t n, std::size_t j, double frequency = 1.0);
SampledSymbol sin_im(std::size_t n, std::size_t j, double frequency = 1.0);
/// exp(-c |z - center|^2), c > 0.
SampledSymbol gaussian_bump(std::size_t n, double c, std::vector<std::complex<double>> center);

}  // namespace bargmann
