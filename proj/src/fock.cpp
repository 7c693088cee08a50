#include "bargmann/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bargmann {

namespace {

using cd = std::complex<double>;

void require_same_basis(const OperatorMatrix& A, const OperatorMatrix& B) {
  if (!(A.basis() == B.basis())) throw BasisMismatch("OperatorMatrix: basis mismatch");
}

// (a+g)!/a! as a floating product, exact for the sizes used here.
long double rising(int a, int g) {
  long double r = 1;
  for (int m = 1; m <= g; ++m) r *= a + m;
  return r;
}

}  // namespace

TruncatedBasis::TruncatedBasis(std::size_t n, int N, double t) : n_(n), N_(N), t_(t) {
  if (n == 0) throw std::invalid_argument("TruncatedBasis: n must be >= 1");
  if (N < 0) throw std::invalid_argument("TruncatedBasis: N must be >= 0");
  if (!(t > 0)) throw std::invalid_argument("TruncatedBasis: t must be positive");
  auto indices = std::make_shared<std::vector<MultiIndex>>(enumerate_upto(n, N));
  auto lookup = std::make_shared<std::map<MultiIndex, std::size_t>>();
  for (std::size_t i = 0; i < indices->size(); ++i) lookup->emplace((*indices)[i], i);
  indices_ = std::move(indices);
  lookup_ = std::move(lookup);
}

std::optional<std::size_t> TruncatedBasis::index_of(const MultiIndex& alpha) const {
  auto it = lookup_->find(alpha);
  if (it == lookup_->end()) return std::nullopt;
  return it->second;
}

TruncatedBasis TruncatedBasis::truncated(int N) const { return TruncatedBasis(n_, N, t_); }

OperatorMatrix::OperatorMatrix(TruncatedBasis basis, Eigen::MatrixXcd entries)
    : basis_(std::move(basis)), entries_(std::move(entries)) {
  const auto m = static_cast<Eigen::Index>(basis_.size());
  if (entries_.rows() != m || entries_.cols() != m) {
    throw std::invalid_argument("OperatorMatrix: entries must be square of the basis size");
  }
}

OperatorMatrix OperatorMatrix::identity(const TruncatedBasis& basis) {
  const auto m = static_cast<Eigen::Index>(basis.size());
  return OperatorMatrix(basis, Eigen::MatrixXcd::Identity(m, m));
}

OperatorMatrix OperatorMatrix::zero(const TruncatedBasis& basis) {
  const auto m = static_cast<Eigen::Index>(basis.size());
  return OperatorMatrix(basis, Eigen::MatrixXcd::Zero(m, m));
}

OperatorMatrix OperatorMatrix::adjoint() const { return OperatorMatrix(basis_, entries_.adjoint()); }

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& o) {
  require_same_basis(*this, o);
  entries_ += o.entries_;
  return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& o) {
  require_same_basis(*this, o);
  entries_ -= o.entries_;
  return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(cd c) {
  entries_ *= c;
  return *this;
}

OperatorMatrix matrix_compose(const OperatorMatrix& A, const OperatorMatrix& B) {
  require_same_basis(A, B);
  return OperatorMatrix(A.basis(), A.entries() * B.entries());
}

OperatorMatrix commutator(const OperatorMatrix& A, const OperatorMatrix& B) {
  require_same_basis(A, B);
  return OperatorMatrix(A.basis(), A.entries() * B.entries() - B.entries() * A.entries());
}

double spectral_norm(const OperatorMatrix& A) {
  if (!A.entries().allFinite()) throw std::domain_error("spectral_norm: non-finite entries");
  if (A.size() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(A.entries());
  return svd.singularValues()(0);
}

OperatorMatrix interior_block(const OperatorMatrix& A, int margin) {
  const int N = A.basis().cutoff();
  if (margin < 0 || margin > N) {
    throw std::out_of_range("interior_block: margin " + std::to_string(margin) + " outside [0, " +
                            std::to_string(N) + "]");
  }
  TruncatedBasis inner = A.basis().truncated(N - margin);
  const auto m = static_cast<Eigen::Index>(inner.size());
  return OperatorMatrix(inner, A.entries().topLeftCorner(m, m));
}

FormalSymbol project_monomial(const MultiIndex& p, const MultiIndex& q) {
  const std::size_t n = p.dimension();
  FormalSymbol r(n);
  auto diff = try_subtract(p, q);
  if (!diff) return r;
  mpq_class c(factorial(p), factorial(*diff));
  c.canonicalize();
  r.add_term(Monomial{*diff, MultiIndex(n), 2 * q.degree()}, GaussianRational(c));
  return r;
}

FormalOperator::FormalOperator(std::size_t n, Action action, std::optional<int> domain_cap)
    : n_(n), action_(std::move(action)), cap_(domain_cap) {
  if (n_ == 0) throw std::invalid_argument("FormalOperator: n must be >= 1");
  if (!action_) throw std::invalid_argument("FormalOperator: missing action");
}

FormalSymbol FormalOperator::apply(const MultiIndex& alpha) const {
  if (alpha.dimension() != n_) throw std::invalid_argument("FormalOperator::apply: dimension mismatch");
  if (cap_ && alpha.degree() > *cap_) {
    throw std::out_of_range("FormalOperator::apply: z^" + alpha.to_string() + " is outside the domain |alpha| <= " +
                            std::to_string(*cap_));
  }
  return action_(alpha);
}

FormalSymbol FormalOperator::apply(const FormalSymbol& holomorphic) const {
  if (!holomorphic.is_holomorphic()) throw std::invalid_argument("FormalOperator::apply: input is not holomorphic");
  FormalSymbol r(n_);
  for (const auto& [m, c] : holomorphic.terms()) {
    FormalSymbol image = apply(m.z);
    for (const auto& [mi, ci] : image.terms()) r.add_term(Monomial{mi.z, mi.zbar, mi.s_power + m.s_power}, ci * c);
  }
  return r;
}

std::map<MultiIndex, FormalSymbol> FormalOperator::table(int D) const {
  std::map<MultiIndex, FormalSymbol> out;
  for (const MultiIndex& alpha : enumerate_upto(n_, D)) out.emplace(alpha, apply(alpha));
  return out;
}

FormalOperator toeplitz_formal(const FormalSymbol& f) {
  const std::size_t n = f.dimension();
  return FormalOperator(n, [f, n](const MultiIndex& alpha) {
    FormalSymbol r(n);
    for (const auto& [m, c] : f.terms()) {
      FormalSymbol p = project_monomial(m.z + alpha, m.zbar);
      for (const auto& [mp, cp] : p.terms()) r.add_term(Monomial{mp.z, mp.zbar, mp.s_power + m.s_power}, cp * c);
    }
    return r;
  });
}

FormalOperator compose_formal(const FormalOperator& A, const FormalOperator& B, int D) {
  if (A.dimension() != B.dimension()) throw std::invalid_argument("compose_formal: dimension mismatch");
  if (D < 0) throw std::invalid_argument("compose_formal: D must be >= 0");
  auto images = std::make_shared<std::map<MultiIndex, FormalSymbol>>();
  for (const MultiIndex& alpha : enumerate_upto(A.dimension(), D)) {
    images->emplace(alpha, A.apply(B.apply(alpha)));
  }
  return FormalOperator(
      A.dimension(), [images](const MultiIndex& alpha) { return images->at(alpha); }, D);
}

bool equal_on(const FormalOperator& A, const FormalOperator& B, int D) {
  if (A.dimension() != B.dimension()) throw std::invalid_argument("equal_on: dimension mismatch");
  for (const MultiIndex& alpha : enumerate_upto(A.dimension(), D)) {
    if (!(A.apply(alpha) == B.apply(alpha))) return false;
  }
  return true;
}

OperatorMatrix toeplitz_matrix_formal(const FormalSymbol& f, const TruncatedBasis& basis) {
  if (f.dimension() != basis.dimension()) throw std::invalid_argument("toeplitz_matrix_formal: dimension mismatch");
  const std::size_t n = basis.dimension();
  const auto m = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd entries = Eigen::MatrixXcd::Zero(m, m);
  const long double s = std::sqrt(static_cast<long double>(basis.t()));
  for (const auto& [mono, c] : f.terms()) {
    const cd coeff = c.to_complex();
    const long double scale = std::pow(s, mono.z.degree() + mono.zbar.degree() + mono.s_power);
    for (std::size_t col = 0; col < basis.size(); ++col) {
      const MultiIndex& alpha = basis.indices()[col];
      std::vector<int> beta(n);
      bool valid = true;
      for (std::size_t j = 0; j < n; ++j) {
        beta[j] = alpha[j] + mono.z[j] - mono.zbar[j];
        valid = valid && beta[j] >= 0;
      }
      if (!valid) continue;
      auto row = basis.index_of(MultiIndex(beta));
      if (!row) continue;
      long double magnitude = 1;
      for (std::size_t j = 0; j < n; ++j) {
        magnitude *= std::sqrt(rising(alpha[j], mono.z[j]) * rising(beta[j], mono.zbar[j]));
      }
      entries(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(col)) +=
          coeff * static_cast<double>(magnitude * scale);
    }
  }
  return OperatorMatrix(basis, std::move(entries));
}

OperatorMatrix formal_operator_matrix(const FormalOperator& A, const TruncatedBasis& basis) {
  if (A.dimension() != basis.dimension()) throw std::invalid_argument("formal_operator_matrix: dimension mismatch");
  const std::size_t n = basis.dimension();
  const auto m = static_cast<Eigen::Index>(basis.size());
  const long double s = std::sqrt(static_cast<long double>(basis.t()));
  // sqrt(alpha! t^|alpha|) for every basis index.
  std::vector<long double> norms(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    long double v = std::pow(s, basis.indices()[i].degree());
    for (std::size_t j = 0; j < n; ++j) v *= std::sqrt(std::tgamma(static_cast<long double>(basis.indices()[i][j]) + 1));
    norms[i] = v;
  }
  Eigen::MatrixXcd entries = Eigen::MatrixXcd::Zero(m, m);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const FormalSymbol image = A.apply(basis.indices()[col]);
    for (const auto& [mono, c] : image.terms()) {
      auto row = basis.index_of(mono.z);
      if (!row) continue;
      const long double scale = std::pow(s, mono.s_power) * norms[*row] / norms[col];
      entries(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(col)) +=
          c.to_complex() * static_cast<double>(scale);
    }
  }
  return OperatorMatrix(basis, std::move(entries));
}

OperatorMatrix toeplitz_matrix_sampled(const SampledSymbol& f, const TruncatedBasis& basis,
                                       const QuadratureRule& rule) {
  if (f.dimension() != basis.dimension()) throw std::invalid_argument("toeplitz_matrix_sampled: dimension mismatch");
  const std::size_t n = basis.dimension();
  const int N = basis.cutoff();
  const auto m = static_cast<Eigen::Index>(basis.size());
  const double s = std::sqrt(basis.t());
  const ComplexGrid grid = complex_tensor_grid(rule, n);

  Eigen::MatrixXcd entries = Eigen::MatrixXcd::Zero(m, m);
  constexpr std::size_t kChunk = 2048;
  double sampled_sup = 0;
  std::vector<cd> x(n);
  // Per-dimension tables u_j^a / sqrt(a!), a = 0..N.
  std::vector<std::vector<cd>> powers(n, std::vector<cd>(static_cast<std::size_t>(N) + 1));

  for (std::size_t start = 0; start < grid.size(); start += kChunk) {
    const std::size_t count = std::min(kChunk, grid.size() - start);
    Eigen::MatrixXcd B(m, static_cast<Eigen::Index>(count));
    Eigen::VectorXcd weight(static_cast<Eigen::Index>(count));
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t node = start + k;
      const cd* u = &grid.points[node * n];
      for (std::size_t j = 0; j < n; ++j) {
        x[j] = s * u[j];
        powers[j][0] = 1.0;
        for (int a = 1; a <= N; ++a) powers[j][a] = powers[j][a - 1] * u[j] / std::sqrt(static_cast<double>(a));
      }
      const cd v = f(x);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw std::runtime_error("toeplitz_matrix_sampled: symbol is not finite at a quadrature node");
      }
      sampled_sup = std::max(sampled_sup, std::abs(v));
      weight(static_cast<Eigen::Index>(k)) = grid.weights[node] * v;
      for (Eigen::Index row = 0; row < m; ++row) {
        const MultiIndex& alpha = basis.indices()[static_cast<std::size_t>(row)];
        cd p = 1.0;
        for (std::size_t j = 0; j < n; ++j) p *= powers[j][alpha[j]];
        B(row, static_cast<Eigen::Index>(k)) = p;
      }
    }
    // (beta, alpha) += sum_k conj(B(beta,k)) w_k B(alpha,k)
    entries.noalias() += B.conjugate() * weight.asDiagonal() * B.transpose();
  }
  entries /= std::pow(std::numbers::pi, static_cast<double>(n));

  const double bound = f.sup_bound().value_or(sampled_sup);
  const double worst = entries.cwiseAbs().maxCoeff();
  if (bound > 0 && worst > 10.0 * bound) {
    throw IllConditionedError("toeplitz_matrix_sampled: entry magnitude " + std::to_string(worst) +
                              " exceeds 10x the symbol bound " + std::to_string(bound) +
                              "; increase Q or lower N");
  }
  return OperatorMatrix(basis, std::move(entries));
}

}  // namespace bargmann
