#include "bargmann/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace bargmann {

QuadratureRule::QuadratureRule(std::vector<double> nodes, std::vector<double> weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.empty() || nodes_.size() != weights_.size()) {
    throw std::invalid_argument("QuadratureRule: nodes and weights must be nonempty and equal length");
  }
}

QuadratureRule gauss_hermite(int Q) {
  if (Q < 1 || Q > 200) throw std::out_of_range("gauss_hermite: Q must be in [1, 200], got " + std::to_string(Q));

  Eigen::VectorXd guess(Q);
  if (Q == 1) {
    guess(0) = 0.0;
  } else {
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(Q, Q);
    for (int k = 1; k < Q; ++k) {
      jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(k / 2.0);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);
    guess = solver.eigenvalues();
  }

  const double pim4 = 1.0 / std::pow(std::numbers::pi, 0.25);
  std::vector<double> nodes(Q), weights(Q);
  for (int i = 0; i < Q; ++i) {
    double x = guess(i);
    double pp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = pim4, p2 = 0.0;
      for (int j = 1; j <= Q; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = x * std::sqrt(2.0 / j) * p2 - std::sqrt(static_cast<double>(j - 1) / j) * p3;
      }
      pp = std::sqrt(2.0 * Q) * p2;
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    nodes[i] = x;
    weights[i] = 2.0 / (pp * pp);
  }

  // Symmetrize: nodes come in +- pairs with equal weights.
  for (int i = 0; i < Q / 2; ++i) {
    const int k = Q - 1 - i;
    const double x = 0.5 * (nodes[k] - nodes[i]);
    const double w = 0.5 * (weights[k] + weights[i]);
    nodes[i] = -x;
    nodes[k] = x;
    weights[i] = weights[k] = w;
  }
  if (Q % 2) nodes[Q / 2] = 0.0;
  return QuadratureRule(std::move(nodes), std::move(weights));
}

ComplexGrid complex_tensor_grid(const QuadratureRule& rule, std::size_t n) {
  if (n == 0) throw std::invalid_argument("complex_tensor_grid: n must be >= 1");
  const std::size_t q = rule.nodes().size();
  const std::size_t per_dim = q * q;
  std::size_t total = 1;
  for (std::size_t j = 0; j < n; ++j) total *= per_dim;

  ComplexGrid grid;
  grid.n = n;
  grid.points.resize(total * n);
  grid.weights.resize(total);
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t rest = k;
    double w = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t local = rest % per_dim;
      rest /= per_dim;
      const std::size_t ix = local / q, iy = local % q;
      grid.points[k * n + j] = {rule.nodes()[ix], rule.nodes()[iy]};
      w *= rule.weights()[ix] * rule.weights()[iy];
    }
    grid.weights[k] = w;
  }
  return grid;
}

void CompensatedSum::add_part(double& sum, double& comp, double v) {
  const double t = sum + v;
  if (std::abs(sum) >= std::abs(v)) {
    comp += (sum - t) + v;
  } else {
    comp += (v - t) + sum;
  }
  sum = t;
}

void CompensatedSum::add(std::complex<double> v) {
  add_part(re_, re_c_, v.real());
  add_part(im_, im_c_, v.imag());
}

}  // namespace bargmann
