#pragma once

#include <complex>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bargmann/fock.hpp"
#include "bargmann/formal_symbol.hpp"
#include "bargmann/sampled_symbol.hpp"

namespace bargmann {

/// A symbol handled exactly (polynomial) or by sampling.
using Symbol = std::variant<FormalSymbol, SampledSymbol>;

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& text);

/// Remainders below this are treated as identically zero.
inline constexpr double kExactZero = 1e-14;
/// Relative agreement required between the working basis N and N/2.
inline constexpr double kHalfBasisTolerance = 1e-3;

struct Diagnostics {
  int N = 0;
  int Q = 0;
  /// Degrees cut from the working basis before taking norms (N minus the observed block).
  int margin = 0;
  /// Largest |alpha| of the observed block, when a fixed window is used.
  std::optional<int> window;
  std::optional<bool> half_basis_agreement;
  std::optional<double> half_basis_relative_difference;
  double threshold = 0;
  std::string mode;  // "formal", "sampled" or "quadrature"
  std::string note;

  bool operator==(const Diagnostics&) const = default;
};

/// Remainder curve of one expansion check. slope is empty exactly when every
/// remainder is below kExactZero ("exact-zero").
struct ExpansionReport {
  std::string check;
  int k = 0;
  std::size_t n = 1;
  std::vector<double> t;
  std::vector<double> remainder;
  std::optional<double> slope;
  Verdict verdict = Verdict::fail;
  Diagnostics diagnostics;

  bool exact_zero() const { return !slope.has_value(); }
  bool operator==(const ExpansionReport&) const = default;
};

/// t_j = start * ratio^j, j = 0..count-1. Requires start > 0, ratio in (0,1), count >= 1.
std::vector<double> geometric_t_grid(double start, double ratio, int count);

/// Tensor grid of 5 x 5 points over [-1,1]^2 in (Re z_j, Im z_j) for every j.
std::vector<std::vector<std::complex<double>>> default_z_grid(std::size_t n);

struct HarnessConfig {
  int N = 40;
  int Q = 40;
  std::vector<double> t_grid = geometric_t_grid(0.2, 0.5, 5);
  /// Empty means default_z_grid(n).
  std::vector<std::vector<std::complex<double>>> z_grid;
};

/// Least-squares slope of log r against log t. Requires at least 4 points, r > 0 and
/// t strictly decreasing; throws std::invalid_argument otherwise.
double slope_fit(const std::vector<double>& t, const std::vector<double>& r);

/// ||T_f T_g - sum_{|alpha|<=k} (-t)^|alpha|/alpha! T_{(d^alpha f)(dbar^alpha g)}||.
///
/// Polynomial pairs are composed exactly on the monomials and measured on the block
/// |alpha| <= N - (deg f + deg g), where compression does not touch the products.
/// Otherwise the matrices are built on the working basis |alpha| <= N and the norm is
/// taken on the fixed window |alpha| <= N/4; the whole computation is repeated on the
/// working basis N/2 and must agree to kHalfBasisTolerance, else the verdict is
/// inconclusive. Pass iff exact-zero or slope >= k + 0.5.
ExpansionReport remainder_curve_thm1(const Symbol& f, const Symbol& g, int k, const HarnessConfig& config = {});

/// ||[T_f, T_g] - i t T_{f,g}||, same measurement rules; pass iff exact-zero or slope >= 1.5.
ExpansionReport check_cor2(const Symbol& f, const Symbol& g, const HarnessConfig& config = {});

/// LHS_k = sum_{|alpha|<=k} (-t)^|alpha|/alpha! ((d^alpha f)(dbar^alpha g))^(t) and
/// RHS_k = f^(t) *_B g^(t) truncated at |alpha| <= k. Returns the t-valuation of the
/// exact difference (at least k + 1).
Valuation check_thm3_formal(const FormalSymbol& f, const FormalSymbol& g, int k);

/// The same difference evaluated with heat_numeric; remainder(t) is its max modulus over
/// the z grid. Pass iff exact-zero or slope >= k + 0.5.
ExpansionReport check_thm3_sampled(const SampledSymbol& f, const SampledSymbol& g, int k,
                                   const HarnessConfig& config = {});

/// max over the z grid of |f^(t)(z) - sum_{|alpha|<=k} t^|alpha|/alpha! d^alpha dbar^alpha f(z)|.
/// Polynomials use the exact heat transform; sampled symbols use heat_numeric.
ExpansionReport check_heat_expansion(const Symbol& f, int k, const HarnessConfig& config = {});

struct CcrEntry {
  std::string label;  // e.g. "[T_p1, T_q1] - (it/2) I"
  double residual;
};

/// Residual norms of the canonical commutation relations for p_j = Im z_j, q_j = Re z_j
/// on the interior block (margin 1) of the basis |alpha| <= N.
std::vector<CcrEntry> ccr_table(std::size_t n, double t, int N);

/// Outcome of an exact or numeric verification suite.
struct SuiteResult {
  std::string name;
  int checked = 0;
  int passed = 0;
  /// Largest numeric deviation seen, for suites with a tolerance.
  double max_error = 0;
  /// Description of the first failing case, empty when everything passed.
  std::string first_failure;

  bool ok() const { return checked > 0 && checked == passed; }
};

/// Product expansion on random Gaussian-rational polynomials p, q of degree <= deg:
/// T_p T_q equals T_{p # q} exactly on every monomial |alpha| <= D.
SuiteResult verify_eq1(std::size_t n, int deg, int trials, std::uint64_t seed, int D = 8);

/// comb_sum(p, q, l) == comb_closed(p, q, l) for all p <= q <= P and l <= P.
SuiteResult verify_comb(int P);

/// moment_double_closed against moment_double_remark for every (alpha, beta, gamma, eps)
/// of total degree <= degmax; moments of total degree <= quad_degmax are also compared with
/// the Gauss-Hermite double integral (rule with Q nodes) to quad_tolerance.
SuiteResult verify_moments(std::size_t n, int degmax, int quad_degmax = 3, int Q = 30, double quad_tolerance = 1e-6);

/// T_{f^(t)} T_{g^(t)} = T_{f^(t) # g^(t)} exactly on monomials |alpha| <= D.
bool prop_sharp_formal(const FormalSymbol& f, const FormalSymbol& g, int D = 8);

/// Largest |double integral - (f^(t) # g^(t))(z)| over the given points and t values.
double prop_sharp_numeric_error(const FormalSymbol& f, const FormalSymbol& g,
                                const std::vector<std::vector<std::complex<double>>>& zs,
                                const std::vector<double>& ts, int Q = 24);

}  // namespace bargmann
