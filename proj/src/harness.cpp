#include "bargmann/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "bargmann/identities.hpp"
#include "bargmann/numeric.hpp"
#include "bargmann/quadrature.hpp"

namespace bargmann {

namespace {

using cd = std::complex<double>;
using ZGrid = std::vector<std::vector<cd>>;
using MatrixBuilder = std::function<OperatorMatrix(const TruncatedBasis&, const QuadratureRule&)>;

std::size_t dimension_of(const Symbol& s) {
  return std::visit([](const auto& x) { return x.dimension(); }, s);
}

SampledSymbol as_sampled(const Symbol& s) {
  if (const auto* f = std::get_if<FormalSymbol>(&s)) return sampled_from_formal(*f);
  return std::get<SampledSymbol>(s);
}

void require_same_dimension(const Symbol& f, const Symbol& g) {
  if (dimension_of(f) != dimension_of(g)) throw std::invalid_argument("harness: symbols have different dimensions");
}

void validate(const HarnessConfig& config) {
  if (config.N < 0) throw std::invalid_argument("harness: N must be >= 0");
  if (config.t_grid.size() < 4) throw std::invalid_argument("harness: the t grid needs at least 4 points");
  for (std::size_t i = 0; i < config.t_grid.size(); ++i) {
    if (!(config.t_grid[i] > 0)) throw std::invalid_argument("harness: t values must be positive");
    if (i > 0 && !(config.t_grid[i] < config.t_grid[i - 1])) {
      throw std::invalid_argument("harness: the t grid must be strictly decreasing");
    }
  }
}

double inverse_factorial(const MultiIndex& alpha) { return 1.0 / factorial(alpha).get_d(); }

GaussianRational signed_inverse_factorial(const MultiIndex& alpha) {
  mpq_class c(alpha.degree() % 2 == 0 ? 1 : -1);
  c /= mpq_class(factorial(alpha));
  return GaussianRational(c);
}

// Classifies the remainders and fills slope and verdict.
void finish(ExpansionReport& report, double threshold, bool diagnostic_ok) {
  report.diagnostics.threshold = threshold;
  const bool all_zero =
      std::all_of(report.remainder.begin(), report.remainder.end(), [](double r) { return r < kExactZero; });
  if (all_zero) {
    report.slope.reset();
    report.verdict = Verdict::pass;
    return;
  }
  std::vector<double> r = report.remainder;
  if (std::any_of(r.begin(), r.end(), [](double x) { return x < kExactZero; })) {
    for (double& x : r) x = std::max(x, kExactZero);
    report.diagnostics.note += (report.diagnostics.note.empty() ? "" : "; ");
    report.diagnostics.note += "remainders below 1e-14 clamped to 1e-14 for the fit";
  }
  report.slope = slope_fit(report.t, r);
  report.verdict = *report.slope >= threshold ? Verdict::pass : Verdict::fail;
  if (!diagnostic_ok) report.verdict = Verdict::inconclusive;
}

ExpansionReport start_report(std::string check, int k, std::size_t n, const HarnessConfig& config) {
  ExpansionReport report;
  report.check = std::move(check);
  report.k = k;
  report.n = n;
  report.t = config.t_grid;
  report.diagnostics.N = config.N;
  report.diagnostics.Q = config.Q;
  return report;
}

// Remainder curve of an exact operator R, measured on |alpha| <= N - margin.
ExpansionReport formal_curve(std::string check, int k, std::size_t n, double threshold, int margin,
                             const FormalOperator& R, const HarnessConfig& config) {
  ExpansionReport report = start_report(std::move(check), k, n, config);
  report.diagnostics.Q = 0;
  const int block = config.N - margin;
  if (block < 0) {
    throw std::invalid_argument("harness: N = " + std::to_string(config.N) + " is below the symbol degree " +
                                std::to_string(margin));
  }
  report.diagnostics.margin = margin;
  report.diagnostics.mode = "formal";
  report.diagnostics.note = "exact composition on monomials |alpha| <= " + std::to_string(block);

  auto images = std::make_shared<std::map<MultiIndex, FormalSymbol>>(R.table(block));
  FormalOperator tabulated(
      n, [images](const MultiIndex& alpha) { return images->at(alpha); }, block);
  for (double t : config.t_grid) {
    report.remainder.push_back(spectral_norm(formal_operator_matrix(tabulated, TruncatedBasis(n, block, t))));
  }
  finish(report, threshold, true);
  return report;
}

// Remainder curve of a numerically assembled operator, measured on the window |alpha| <= N/4
// with the working basis N and again with N/2.
ExpansionReport sampled_curve(std::string check, int k, std::size_t n, double threshold, const MatrixBuilder& build,
                              const HarnessConfig& config) {
  ExpansionReport report = start_report(std::move(check), k, n, config);
  const int window = config.N / 4;
  const int half = config.N / 2;
  if (window < 1) throw std::invalid_argument("harness: sampled symbols need N >= 4");
  const QuadratureRule rule = gauss_hermite(config.Q);
  report.diagnostics.window = window;
  report.diagnostics.margin = config.N - window;
  report.diagnostics.mode = "sampled";

  double worst = 0;
  for (double t : config.t_grid) {
    const OperatorMatrix full = build(TruncatedBasis(n, config.N, t), rule);
    const OperatorMatrix reduced = build(TruncatedBasis(n, half, t), rule);
    const double r_full = spectral_norm(interior_block(full, config.N - window));
    const double r_half = spectral_norm(interior_block(reduced, half - window));
    report.remainder.push_back(r_full);
    const double scale = std::max(r_full, r_half);
    if (scale >= kExactZero) worst = std::max(worst, std::abs(r_full - r_half) / scale);
  }
  const bool agree = worst <= kHalfBasisTolerance;
  report.diagnostics.half_basis_agreement = agree;
  report.diagnostics.half_basis_relative_difference = worst;
  if (!agree) report.diagnostics.note = "truncation-dominated: working bases N and N/2 disagree on the window";
  finish(report, threshold, agree);
  return report;
}

int total_degree(const FormalSymbol& f, const FormalSymbol& g) { return std::max(0, f.degree()) + std::max(0, g.degree()); }

ZGrid z_grid_of(const HarnessConfig& config, std::size_t n) {
  ZGrid grid = config.z_grid.empty() ? default_z_grid(n) : config.z_grid;
  for (const auto& z : grid) {
    if (z.size() != n) throw std::invalid_argument("harness: z grid point has the wrong dimension");
  }
  return grid;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "fail";
}

Verdict verdict_from_string(const std::string& text) {
  if (text == "pass") return Verdict::pass;
  if (text == "fail") return Verdict::fail;
  if (text == "inconclusive") return Verdict::inconclusive;
  throw std::invalid_argument("unknown verdict '" + text + "'");
}

std::vector<double> geometric_t_grid(double start, double ratio, int count) {
  if (!(start > 0)) throw std::invalid_argument("t grid: start must be positive");
  if (!(ratio > 0 && ratio < 1)) throw std::invalid_argument("t grid: ratio must lie in (0, 1)");
  if (count < 1) throw std::invalid_argument("t grid: count must be positive");
  std::vector<double> grid;
  double t = start;
  for (int j = 0; j < count; ++j, t *= ratio) grid.push_back(t);
  return grid;
}

ZGrid default_z_grid(std::size_t n) {
  std::vector<cd> plane;
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) plane.emplace_back(-1.0 + 0.5 * a, -1.0 + 0.5 * b);
  }
  ZGrid grid{{}};
  for (std::size_t j = 0; j < n; ++j) {
    ZGrid next;
    for (const auto& prefix : grid) {
      for (const cd& w : plane) {
        auto point = prefix;
        point.push_back(w);
        next.push_back(std::move(point));
      }
    }
    grid = std::move(next);
  }
  return grid;
}

double slope_fit(const std::vector<double>& t, const std::vector<double>& r) {
  if (t.size() != r.size()) throw std::invalid_argument("slope_fit: t and r differ in length");
  if (t.size() < 4) throw std::invalid_argument("slope_fit: need at least 4 points");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(r[i] > 0)) throw std::invalid_argument("slope_fit: remainders must be positive");
    if (!(t[i] > 0)) throw std::invalid_argument("slope_fit: t must be positive");
    if (i > 0 && !(t[i] < t[i - 1])) throw std::invalid_argument("slope_fit: t must be strictly decreasing");
  }
  const double m = static_cast<double>(t.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    sx += std::log(t[i]);
    sy += std::log(r[i]);
  }
  const double mx = sx / m, my = sy / m;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double dx = std::log(t[i]) - mx;
    sxy += dx * (std::log(r[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

ExpansionReport remainder_curve_thm1(const Symbol& f, const Symbol& g, int k, const HarnessConfig& config) {
  if (k < 0) throw std::invalid_argument("remainder_curve_thm1: k must be >= 0");
  require_same_dimension(f, g);
  validate(config);
  const std::size_t n = dimension_of(f);
  const double threshold = k + 0.5;

  const auto* ff = std::get_if<FormalSymbol>(&f);
  const auto* gf = std::get_if<FormalSymbol>(&g);
  if (ff && gf) {
    const FormalOperator Tf = toeplitz_formal(*ff);
    const FormalOperator Tg = toeplitz_formal(*gf);
    const FormalOperator Ts = toeplitz_formal(sharp_formal(*ff, *gf, k));
    FormalOperator R(n, [Tf, Tg, Ts](const MultiIndex& alpha) { return Tf.apply(Tg.apply(alpha)) - Ts.apply(alpha); });
    return formal_curve("thm1", k, n, threshold, total_degree(*ff, *gf), R, config);
  }

  const SampledSymbol fs = as_sampled(f);
  const SampledSymbol gs = as_sampled(g);
  struct Term {
    int degree;
    double weight;  // (-1)^|alpha| / alpha!
    SampledSymbol symbol;
  };
  std::vector<Term> terms;
  const MultiIndex zero(n);
  for (const MultiIndex& alpha : enumerate_upto(n, k)) {
    terms.push_back({alpha.degree(), (alpha.degree() % 2 ? -1.0 : 1.0) * inverse_factorial(alpha),
                     fs.derivative(alpha, zero) * gs.derivative(zero, alpha)});
  }
  MatrixBuilder build = [fs, gs, terms](const TruncatedBasis& basis, const QuadratureRule& rule) {
    OperatorMatrix M = matrix_compose(toeplitz_matrix_sampled(fs, basis, rule), toeplitz_matrix_sampled(gs, basis, rule));
    for (const Term& term : terms) {
      M -= (term.weight * std::pow(basis.t(), term.degree)) * toeplitz_matrix_sampled(term.symbol, basis, rule);
    }
    return M;
  };
  return sampled_curve("thm1", k, n, threshold, build, config);
}

ExpansionReport check_cor2(const Symbol& f, const Symbol& g, const HarnessConfig& config) {
  require_same_dimension(f, g);
  validate(config);
  const std::size_t n = dimension_of(f);
  constexpr double threshold = 1.5;

  const auto* ff = std::get_if<FormalSymbol>(&f);
  const auto* gf = std::get_if<FormalSymbol>(&g);
  if (ff && gf) {
    const FormalOperator Tf = toeplitz_formal(*ff);
    const FormalOperator Tg = toeplitz_formal(*gf);
    const FormalOperator Tb = toeplitz_formal(poisson_bracket(*ff, *gf) * FormalSymbol::t(n) * GaussianRational::i());
    FormalOperator R(n, [Tf, Tg, Tb](const MultiIndex& alpha) {
      return Tf.apply(Tg.apply(alpha)) - Tg.apply(Tf.apply(alpha)) - Tb.apply(alpha);
    });
    return formal_curve("cor2", 1, n, threshold, total_degree(*ff, *gf), R, config);
  }

  const SampledSymbol fs = as_sampled(f);
  const SampledSymbol gs = as_sampled(g);
  std::optional<SampledSymbol> bracket;
  const MultiIndex zero(n);
  for (std::size_t j = 0; j < n; ++j) {
    const MultiIndex e = MultiIndex::unit(n, j);
    SampledSymbol term = fs.derivative(e, zero) * gs.derivative(zero, e) - fs.derivative(zero, e) * gs.derivative(e, zero);
    bracket = bracket ? *bracket + term : term;
  }
  const SampledSymbol poisson = scaled(*bracket, cd(0, 1));
  MatrixBuilder build = [fs, gs, poisson](const TruncatedBasis& basis, const QuadratureRule& rule) {
    const OperatorMatrix A = toeplitz_matrix_sampled(fs, basis, rule);
    const OperatorMatrix B = toeplitz_matrix_sampled(gs, basis, rule);
    return commutator(A, B) - cd(0, basis.t()) * toeplitz_matrix_sampled(poisson, basis, rule);
  };
  return sampled_curve("cor2", 1, n, threshold, build, config);
}

Valuation check_thm3_formal(const FormalSymbol& f, const FormalSymbol& g, int k) {
  if (k < 0) throw std::invalid_argument("check_thm3_formal: k must be >= 0");
  if (f.dimension() != g.dimension()) throw std::invalid_argument("check_thm3_formal: dimension mismatch");
  const std::size_t n = f.dimension();
  FormalSymbol lhs(n);
  FormalSymbol tpow = FormalSymbol::constant(n, 1);
  for (int d = 0; d <= k; ++d) {
    for (const MultiIndex& alpha : enumerate_exact(n, d)) {
      const FormalSymbol product =
          differentiate(f, alpha, Wirtinger::holomorphic) * differentiate(g, alpha, Wirtinger::antiholomorphic);
      lhs = lhs + heat_transform_formal(product) * tpow * signed_inverse_factorial(alpha);
    }
    tpow = tpow * FormalSymbol::t(n);
  }
  const FormalSymbol rhs = star_berezin(heat_transform_formal(f), heat_transform_formal(g), k);
  return t_valuation(lhs - rhs);
}

ExpansionReport check_thm3_sampled(const SampledSymbol& f, const SampledSymbol& g, int k, const HarnessConfig& config) {
  if (k < 0) throw std::invalid_argument("check_thm3_sampled: k must be >= 0");
  if (f.dimension() != g.dimension()) throw std::invalid_argument("check_thm3_sampled: dimension mismatch");
  validate(config);
  const std::size_t n = f.dimension();
  const ZGrid zs = z_grid_of(config, n);
  const QuadratureRule rule = gauss_hermite(config.Q);

  struct Term {
    int degree;
    double inv_factorial;
    SampledSymbol lhs;        // (d^alpha f)(dbar^alpha g)
    SampledSymbol rhs_left;   // dbar^alpha f
    SampledSymbol rhs_right;  // d^alpha g
  };
  std::vector<Term> terms;
  const MultiIndex zero(n);
  for (const MultiIndex& alpha : enumerate_upto(n, k)) {
    terms.push_back({alpha.degree(), inverse_factorial(alpha), f.derivative(alpha, zero) * g.derivative(zero, alpha),
                     f.derivative(zero, alpha), g.derivative(alpha, zero)});
  }

  ExpansionReport report = start_report("thm3", k, n, config);
  report.diagnostics.mode = "quadrature";
  report.diagnostics.note = "max over " + std::to_string(zs.size()) + " z points";
  for (double t : config.t_grid) {
    double worst = 0;
    for (const auto& z : zs) {
      cd lhs = 0, rhs = 0;
      for (const Term& term : terms) {
        const double tp = std::pow(t, term.degree) * term.inv_factorial;
        lhs += (term.degree % 2 ? -tp : tp) * heat_numeric(term.lhs, z, t, rule);
        rhs += tp * heat_numeric(term.rhs_left, z, t, rule) * heat_numeric(term.rhs_right, z, t, rule);
      }
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    report.remainder.push_back(worst);
  }
  finish(report, k + 0.5, true);
  return report;
}

ExpansionReport check_heat_expansion(const Symbol& f, int k, const HarnessConfig& config) {
  if (k < 0) throw std::invalid_argument("check_heat_expansion: k must be >= 0");
  validate(config);
  const std::size_t n = dimension_of(f);
  const ZGrid zs = z_grid_of(config, n);
  ExpansionReport report = start_report("heat", k, n, config);
  report.diagnostics.note = "max over " + std::to_string(zs.size()) + " z points";

  if (const auto* ff = std::get_if<FormalSymbol>(&f)) {
    report.diagnostics.mode = "formal";
    report.diagnostics.Q = 0;
    FormalSymbol difference = heat_transform_formal(*ff);
    FormalSymbol tpow = FormalSymbol::constant(n, 1);
    for (int d = 0; d <= k; ++d) {
      for (const MultiIndex& alpha : enumerate_exact(n, d)) {
        const FormalSymbol dd =
            differentiate(differentiate(*ff, alpha, Wirtinger::holomorphic), alpha, Wirtinger::antiholomorphic);
        mpq_class c(1);
        c /= mpq_class(factorial(alpha));
        difference = difference - dd * tpow * GaussianRational(c);
      }
      tpow = tpow * FormalSymbol::t(n);
    }
    for (double t : config.t_grid) {
      double worst = 0;
      if (!difference.is_zero()) {
        for (const auto& z : zs) worst = std::max(worst, std::abs(evaluate(difference, z, t)));
      }
      report.remainder.push_back(worst);
    }
    finish(report, k + 0.5, true);
    return report;
  }

  const SampledSymbol& fs = std::get<SampledSymbol>(f);
  const QuadratureRule rule = gauss_hermite(config.Q);
  report.diagnostics.mode = "quadrature";
  std::vector<std::pair<int, std::pair<double, SampledSymbol>>> terms;
  for (const MultiIndex& alpha : enumerate_upto(n, k)) {
    terms.push_back({alpha.degree(), {inverse_factorial(alpha), fs.derivative(alpha, alpha)}});
  }
  for (double t : config.t_grid) {
    double worst = 0;
    for (const auto& z : zs) {
      cd taylor = 0;
      for (const auto& [degree, term] : terms) taylor += std::pow(t, degree) * term.first * term.second(z);
      worst = std::max(worst, std::abs(heat_numeric(fs, z, t, rule) - taylor));
    }
    report.remainder.push_back(worst);
  }
  finish(report, k + 0.5, true);
  return report;
}

std::vector<CcrEntry> ccr_table(std::size_t n, double t, int N) {
  if (N < 1) throw std::invalid_argument("ccr_table: N must be >= 1");
  const TruncatedBasis basis(n, N, t);
  std::vector<OperatorMatrix> p, q;
  for (std::size_t j = 0; j < n; ++j) {
    const FormalSymbol z = FormalSymbol::z(n, j), zb = FormalSymbol::zbar(n, j);
    // p_j = (z_j - zbar_j)/(2i), q_j = (z_j + zbar_j)/2.
    p.push_back(toeplitz_matrix_formal((z - zb) * GaussianRational(0, mpq_class(-1, 2)), basis));
    q.push_back(toeplitz_matrix_formal((z + zb) * GaussianRational(mpq_class(1, 2)), basis));
  }
  const auto residual = [](const OperatorMatrix& M) { return spectral_norm(interior_block(M, 1)); };
  const OperatorMatrix identity = OperatorMatrix::identity(basis);
  std::vector<CcrEntry> table;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = j + 1; l < n; ++l) {
      const std::string jl = std::to_string(j + 1) + ", T_";
      table.push_back({"[T_p" + jl + "p" + std::to_string(l + 1) + "]", residual(commutator(p[j], p[l]))});
      table.push_back({"[T_q" + jl + "q" + std::to_string(l + 1) + "]", residual(commutator(q[j], q[l]))});
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) {
      std::string label = "[T_p" + std::to_string(j + 1) + ", T_q" + std::to_string(l + 1) + "]";
      OperatorMatrix M = commutator(p[j], q[l]);
      if (j == l) {
        M -= cd(0, t / 2) * identity;
        label += " - (it/2) I";
      }
      table.push_back({label, residual(M)});
    }
  }
  return table;
}

SuiteResult verify_eq1(std::size_t n, int deg, int trials, std::uint64_t seed, int D) {
  SuiteResult result;
  result.name = "eq1";
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const FormalSymbol p = random_symbol(rng, n, deg);
    const FormalSymbol q = random_symbol(rng, n, deg);
    ++result.checked;
    if (equal_on(compose_formal(toeplitz_formal(p), toeplitz_formal(q), D), toeplitz_formal(sharp_formal(p, q)), D)) {
      ++result.passed;
    } else if (result.first_failure.empty()) {
      result.first_failure = "trial " + std::to_string(trial) + ": p = " + p.to_string() + ", q = " + q.to_string();
    }
  }
  return result;
}

SuiteResult verify_comb(int P) {
  if (P < 0) throw std::invalid_argument("verify_comb: P must be >= 0");
  SuiteResult result;
  result.name = "comb";
  for (int q = 0; q <= P; ++q) {
    for (int p = 0; p <= q; ++p) {
      for (int l = 0; l <= P; ++l) {
        ++result.checked;
        if (comb_sum(p, q, l) == comb_closed(p, q, l)) {
          ++result.passed;
        } else if (result.first_failure.empty()) {
          result.first_failure = "(p, q, l) = (" + std::to_string(p) + ", " + std::to_string(q) + ", " +
                                 std::to_string(l) + ")";
        }
      }
    }
  }
  return result;
}

SuiteResult verify_moments(std::size_t n, int degmax, int quad_degmax, int Q, double quad_tolerance) {
  SuiteResult result;
  result.name = "moments";
  // Every split of a multi-index of size 4n into (alpha, beta, gamma, eps).
  const std::vector<MultiIndex> tuples = enumerate_upto(4 * n, degmax);
  const QuadratureRule rule = gauss_hermite(Q);
  const std::vector<cd> origin(n, cd(0));
  for (const MultiIndex& tuple : tuples) {
    std::vector<int> parts[4];
    for (std::size_t i = 0; i < 4 * n; ++i) parts[i / n].push_back(tuple[i]);
    const MultiIndex alpha(parts[0]), beta(parts[1]), gamma(parts[2]), eps(parts[3]);
    const std::string label = "(" + alpha.to_string() + ", " + beta.to_string() + ", " + gamma.to_string() + ", " +
                              eps.to_string() + ")";
    const GaussianRational closed = moment_double_closed(alpha, beta, gamma, eps);
    bool ok = closed == moment_double_remark(alpha, beta, gamma, eps);
    if (ok && tuple.degree() <= quad_degmax) {
      const MultiIndex zero(n);
      const SampledSymbol f = sampled_from_formal(FormalSymbol::monomial(n, Monomial{alpha, beta, 0}));
      const SampledSymbol g = sampled_from_formal(FormalSymbol::monomial(n, Monomial{gamma, eps, 0}));
      const double error = std::abs(sharp_integral_numeric(f, g, origin, 1.0, rule) - closed.to_complex());
      result.max_error = std::max(result.max_error, error);
      ok = error <= quad_tolerance;
    }
    ++result.checked;
    if (ok) {
      ++result.passed;
    } else if (result.first_failure.empty()) {
      result.first_failure = label;
    }
  }
  return result;
}

bool prop_sharp_formal(const FormalSymbol& f, const FormalSymbol& g, int D) {
  const FormalSymbol hf = heat_transform_formal(f);
  const FormalSymbol hg = heat_transform_formal(g);
  return equal_on(compose_formal(toeplitz_formal(hf), toeplitz_formal(hg), D), toeplitz_formal(sharp_formal(hf, hg)),
                  D);
}

double prop_sharp_numeric_error(const FormalSymbol& f, const FormalSymbol& g, const ZGrid& zs,
                                const std::vector<double>& ts, int Q) {
  const QuadratureRule rule = gauss_hermite(Q);
  const SampledSymbol fs = sampled_from_formal(f);
  const SampledSymbol gs = sampled_from_formal(g);
  const FormalSymbol oracle = sharp_formal(heat_transform_formal(f), heat_transform_formal(g));
  double worst = 0;
  for (double t : ts) {
    for (const auto& z : zs) {
      worst = std::max(worst, std::abs(sharp_integral_numeric(fs, gs, z, t, rule) - evaluate(oracle, z, t)));
    }
  }
  return worst;
}

}  // namespace bargmann
