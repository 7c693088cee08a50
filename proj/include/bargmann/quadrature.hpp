#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace bargmann {

/// Gauss-Hermite rule for the weight exp(-x^2) on the real line.
class QuadratureRule {
 public:
  QuadratureRule(std::vector<double> nodes, std::vector<double> weights);

  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Physicists' Gauss-Hermite rule with Q nodes, 1 <= Q <= 200. Nodes are seeded by
/// Golub-Welsch and polished by Newton on the orthonormal Hermite recurrence.
/// Throws std::out_of_range for Q outside [1, 200].
QuadratureRule gauss_hermite(int Q);

/// Tensor grid over C^n: every point w has n complex coordinates built from
/// 2n real Gauss-Hermite nodes; weights are products (sum = pi^n).
struct ComplexGrid {
  std::size_t n = 0;
  std::vector<std::complex<double>> points;  // point k occupies [k*n, k*n + n)
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
};

ComplexGrid complex_tensor_grid(const QuadratureRule& rule, std::size_t n);

/// Neumaier-compensated accumulator, so sums do not depend on how many terms
/// happen to cancel early.
class CompensatedSum {
 public:
  void add(std::complex<double> v);
  std::complex<double> value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(double& sum, double& comp, double v);
  double re_ = 0, re_c_ = 0, im_ = 0, im_c_ = 0;
};

}  // namespace bargmann
