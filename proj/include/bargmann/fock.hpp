#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bargmann/formal_symbol.hpp"
#include "bargmann/multiindex.hpp"
#include "bargmann/quadrature.hpp"
#include "bargmann/sampled_symbol.hpp"

namespace bargmann {

/// Orthonormal basis {e_alpha^(t) = z^alpha / sqrt(alpha! t^|alpha|) : |alpha| <= N} of
/// the truncated Fock space, ordered as enumerate_upto(n, N).
class TruncatedBasis {
 public:
  TruncatedBasis(std::size_t n, int N, double t);

  std::size_t dimension() const { return n_; }
  int cutoff() const { return N_; }
  double t() const { return t_; }
  std::size_t size() const { return indices_->size(); }
  const std::vector<MultiIndex>& indices() const { return *indices_; }
  std::optional<std::size_t> index_of(const MultiIndex& alpha) const;

  /// Same n and t with a smaller cutoff; its indices are a prefix of this basis.
  TruncatedBasis truncated(int N) const;

  bool operator==(const TruncatedBasis& o) const { return n_ == o.n_ && N_ == o.N_ && t_ == o.t_; }

 private:
  std::size_t n_;
  int N_;
  double t_;
  std::shared_ptr<const std::vector<MultiIndex>> indices_;
  std::shared_ptr<const std::map<MultiIndex, std::size_t>> lookup_;
};

/// Dense matrix of an operator in a TruncatedBasis; entry (row beta, col alpha)
/// is <T e_alpha, e_beta>.
class OperatorMatrix {
 public:
  OperatorMatrix(TruncatedBasis basis, Eigen::MatrixXcd entries);

  static OperatorMatrix identity(const TruncatedBasis& basis);
  static OperatorMatrix zero(const TruncatedBasis& basis);

  const TruncatedBasis& basis() const { return basis_; }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  std::complex<double> operator()(std::size_t row, std::size_t col) const { return entries_(row, col); }
  std::size_t size() const { return basis_.size(); }

  OperatorMatrix adjoint() const;

  OperatorMatrix& operator+=(const OperatorMatrix& o);
  OperatorMatrix& operator-=(const OperatorMatrix& o);
  OperatorMatrix& operator*=(std::complex<double> c);

  friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
  friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }
  friend OperatorMatrix operator*(std::complex<double> c, OperatorMatrix a) { return a *= c; }

 private:
  TruncatedBasis basis_;
  Eigen::MatrixXcd entries_;
};

/// Thrown when two matrices live on different truncated bases.
class BasisMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Quadrature produced entries far beyond what a bounded symbol allows.
class IllConditionedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

OperatorMatrix matrix_compose(const OperatorMatrix& A, const OperatorMatrix& B);
OperatorMatrix commutator(const OperatorMatrix& A, const OperatorMatrix& B);

/// Largest singular value. Throws std::domain_error on non-finite entries.
double spectral_norm(const OperatorMatrix& A);

/// Restriction to rows and columns with |alpha| <= N - margin.
/// Throws std::out_of_range when margin > N or margin < 0.
OperatorMatrix interior_block(const OperatorMatrix& A, int margin);

/// P^(t)(z^p zbar^q) = p!/(p-q)! t^|q| z^(p-q) when q <= p, else 0.
FormalSymbol project_monomial(const MultiIndex& p, const MultiIndex& q);

/// Exact linear map on the monomials z^alpha. The image of each monomial is a
/// holomorphic FormalSymbol (its terms are the (target, coefficient, s power) list).
class FormalOperator {
 public:
  using Action = std::function<FormalSymbol(const MultiIndex&)>;

  FormalOperator(std::size_t n, Action action, std::optional<int> domain_cap = std::nullopt);

  std::size_t dimension() const { return n_; }
  /// Inputs with |alpha| above the cap are outside the domain.
  std::optional<int> domain_cap() const { return cap_; }

  /// Image of z^alpha. Throws std::out_of_range beyond the domain cap.
  FormalSymbol apply(const MultiIndex& alpha) const;
  /// Linear extension to holomorphic polynomials (s powers pass through).
  FormalSymbol apply(const FormalSymbol& holomorphic) const;

  /// Action table on every |alpha| <= D.
  std::map<MultiIndex, FormalSymbol> table(int D) const;

 private:
  std::size_t n_;
  Action action_;
  std::optional<int> cap_;
};

/// T_f = P^(t) M_f on monomials.
FormalOperator toeplitz_formal(const FormalSymbol& f);

/// A o B on inputs |alpha| <= D, tabulated exactly.
FormalOperator compose_formal(const FormalOperator& A, const FormalOperator& B, int D = 8);

/// Exact comparison of the actions on every |alpha| <= D.
bool equal_on(const FormalOperator& A, const FormalOperator& B, int D = 8);

/// Matrix of T_f for polynomial f: a term c z^gamma zbar^delta s^k contributes
/// c (alpha+gamma)!/sqrt(alpha! beta!) t^((|gamma|+|delta|+k)/2) at beta = alpha+gamma-delta.
OperatorMatrix toeplitz_matrix_formal(const FormalSymbol& f, const TruncatedBasis& basis);

/// Orthonormal-basis matrix of an exact operator: A z^alpha = sum c s^k z^beta gives entry
/// c t^(k/2) sqrt(beta! t^|beta| / (alpha! t^|alpha|)) at (beta, alpha). Images outside the
/// basis are dropped, so this is the compression P_N A P_N.
OperatorMatrix formal_operator_matrix(const FormalOperator& A, const TruncatedBasis& basis);

/// Matrix of T_f for a sampled symbol:
///   pi^{-n} int f(sqrt(t) u) u^alpha ubar^beta / sqrt(alpha! beta!) exp(-|u|^2) du
/// by tensor Gauss-Hermite over 2n real variables. Throws IllConditionedError when an
/// entry exceeds ten times the symbol's sup bound (or the largest sampled |f|).
OperatorMatrix toeplitz_matrix_sampled(const SampledSymbol& f, const TruncatedBasis& basis,
                                       const QuadratureRule& rule);

}  // namespace bargmann
