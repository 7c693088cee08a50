// Acceptance suite: one PASS/FAIL line per criterion, with the measured
// quantity, the tolerance and the runtime against its budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "bargmann/harness.hpp"
#include "bargmann/numeric.hpp"

using namespace bargmann;
using cd = std::complex<double>;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

std::string slope_text(const ExpansionReport& r) { return r.slope ? fmt(*r.slope) : std::string("exact-zero"); }

Outcome suite_outcome(const SuiteResult& r) {
  Outcome o;
  o.ok = r.ok();
  o.detail = r.name + " " + std::to_string(r.passed) + "/" + std::to_string(r.checked);
  if (!r.first_failure.empty()) o.detail += " (first failure: " + r.first_failure + ")";
  return o;
}

void merge(Outcome& into, const Outcome& part) {
  into.ok = into.ok && part.ok;
  into.detail += (into.detail.empty() ? "" : "; ") + part.detail;
}

// Exact product expansion on random polynomial pairs.
Outcome criterion1() {
  Outcome o;
  for (std::size_t n : {1, 2}) merge(o, suite_outcome(verify_eq1(n, 3, 50, 20240 + n, 8)));
  return o;
}

Outcome criterion2() { return suite_outcome(verify_comb(12)); }

Outcome criterion3() {
  Outcome o;
  const SuiteResult one = verify_moments(1, 8, 3, 30, 1e-6);
  merge(o, suite_outcome(one));
  o.detail += ", max quadrature error " + fmt(one.max_error) + " (tol 1e-6)";
  merge(o, suite_outcome(verify_moments(2, 4, -1)));
  return o;
}

Outcome criterion4() {
  std::mt19937_64 rng(4004);
  int exact = 0;
  double worst = 0;
  const std::vector<std::vector<cd>> zs{{{0.0, 0.0}}, {{0.3, 0.2}}, {{-0.5, 0.4}}};
  for (int trial = 0; trial < 20; ++trial) {
    const FormalSymbol f = random_symbol(rng, 1, 3), g = random_symbol(rng, 1, 3);
    if (prop_sharp_formal(f, g, 8)) ++exact;
    worst = std::max(worst, prop_sharp_numeric_error(f, g, zs, {1.0, 0.5, 0.1}, 24));
  }
  Outcome o;
  o.ok = exact == 20 && worst <= 1e-6;
  o.detail = "formal " + std::to_string(exact) + "/20 exact; numeric max error " + fmt(worst) + " (tol 1e-6, Q=24)";
  return o;
}

HarnessConfig desk_config() {
  HarnessConfig c;
  c.N = 40;
  c.Q = 40;
  c.t_grid = geometric_t_grid(0.2, 0.5, 5);
  return c;
}

Outcome criterion5() {
  Outcome o;
  const SampledSymbol f = cos_re(1, 0);
  for (int k : {1, 2}) {
    const ExpansionReport r = remainder_curve_thm1(f, f, k, desk_config());
    const double need = k + 0.5;
    const bool diag = r.diagnostics.half_basis_agreement.value_or(false);
    Outcome part;
    part.ok = r.slope && *r.slope >= need && diag && r.verdict == Verdict::pass;
    part.detail = "k=" + std::to_string(k) + " slope " + slope_text(r) + " (need " + fmt(need) + "), N/2 diff " +
                  fmt(r.diagnostics.half_basis_relative_difference.value_or(NAN)) + " (tol 1e-3)";
    merge(o, part);
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const SampledSymbol c = cos_re(1, 0), s = sin_im(1, 0);
  for (const auto& [label, g] : {std::pair{"g=cos", c}, std::pair{"g=sin(im)", s}}) {
    const ExpansionReport r = check_cor2(c, g, desk_config());
    Outcome part;
    part.ok = r.verdict == Verdict::pass && (r.exact_zero() || *r.slope >= 1.5);
    part.detail = std::string(label) + " slope " + slope_text(r) + " (need 1.5)";
    merge(o, part);
  }
  const FormalSymbol z = FormalSymbol::z(1, 0), zb = FormalSymbol::zbar(1, 0);
  const FormalSymbol p1 = (z - zb) * GaussianRational(0, mpq_class(-1, 2));
  const FormalSymbol q1 = (z + zb) * GaussianRational(mpq_class(1, 2));
  const ExpansionReport r = check_cor2(p1, q1, desk_config());
  double worst = 0;
  for (double x : r.remainder) worst = std::max(worst, x);
  merge(o, {worst <= 1e-12, "p1,q1 max remainder " + fmt(worst) + " (tol 1e-12)"});
  return o;
}

Outcome criterion7() {
  std::mt19937_64 rng(7007);
  int good = 0, total = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = trial % 2 == 0 ? 1 : 2;
    const FormalSymbol f = random_symbol(rng, n, 3), g = random_symbol(rng, n, 3);
    for (int k = 0; k <= 3; ++k) {
      ++total;
      if (check_thm3_formal(f, g, k).at_least(k + 1)) ++good;
    }
  }
  Outcome o{good == total, "formal " + std::to_string(good) + "/" + std::to_string(total) + " valuations >= k+1"};
  const SampledSymbol c = cos_re(1, 0);
  for (int k = 0; k <= 2; ++k) {
    const ExpansionReport r = check_thm3_sampled(c, c, k, desk_config());
    const double need = k + 0.5;
    merge(o, {r.slope && *r.slope >= need && r.verdict == Verdict::pass,
              "k=" + std::to_string(k) + " slope " + slope_text(r) + " (need " + fmt(need) + ")"});
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  const HarnessConfig config = desk_config();
  for (int k : {1, 2}) {
    const ExpansionReport r = check_heat_expansion(cos_re(1, 0), k, config);
    double worst = 0;
    for (std::size_t i = 0; i < r.t.size(); ++i) {
      // |e^{-t/4} - Taylor_k(-t/4)| is the remainder at z = 0, where |cos| peaks.
      const double x = -r.t[i] / 4;
      double taylor = 0, term = 1;
      for (int m = 0; m <= k; ++m) {
        taylor += term;
        term *= x / (m + 1);
      }
      worst = std::max(worst, std::abs(r.remainder[i] - std::abs(std::exp(x) - taylor)));
    }
    const double need = k + 0.5;
    merge(o, {r.slope && *r.slope >= need && worst <= 1e-8,
              "k=" + std::to_string(k) + " slope " + slope_text(r) + " (need " + fmt(need) + "), closed-form error " +
                  fmt(worst) + " (tol 1e-8)"});
  }
  const FormalSymbol z = FormalSymbol::z(1, 0), zb = FormalSymbol::zbar(1, 0);
  for (int k : {1, 2}) {
    FormalSymbol f = FormalSymbol::constant(1, 1);
    for (int d = 0; d < k; ++d) f = f * z * zb;
    f = f + z * z * GaussianRational(3);
    const ExpansionReport r = check_heat_expansion(f, k, config);
    merge(o, {r.exact_zero(), "degree " + std::to_string(2 * k) + " polynomial " + slope_text(r)});
  }
  return o;
}

Outcome criterion9() {
  double worst = 0;
  for (std::size_t n : {1, 2}) {
    for (double t : {0.25, 1.0}) {
      for (const auto& e : ccr_table(n, t, 20)) worst = std::max(worst, e.residual);
    }
  }
  return {worst <= 1e-10, "max residual " + fmt(worst) + " (tol 1e-10)"};
}

Outcome criterion10() {
  double moment_error = 0;
  for (int Q = 1; Q <= 12; ++Q) {
    const QuadratureRule rule = gauss_hermite(Q);
    for (int m = 0; m <= 2 * Q - 1; ++m) {
      long double s = 0;
      for (int j = 0; j < Q; ++j) {
        s += static_cast<long double>(rule.weights()[j]) * std::pow(static_cast<long double>(rule.nodes()[j]), m);
      }
      double exact = 0;
      if (m % 2 == 0) {
        exact = std::sqrt(std::numbers::pi);
        for (int r = 1; r < m; r += 2) exact *= r / 2.0;
      }
      moment_error = std::max(moment_error, std::abs(static_cast<double>(s) - exact) / std::max(1.0, std::abs(exact)));
    }
  }
  std::mt19937_64 rng(1010);
  double heat_error = 0;
  const std::vector<std::vector<cd>> points1{{{0.0, 0.0}}, {{0.4, -0.3}}, {{-0.8, 0.6}}};
  for (int trial = 0; trial < 20; ++trial) {
    const FormalSymbol f = random_symbol(rng, 1, 4);
    const FormalSymbol hf = heat_transform_formal(f);
    for (double t : {0.1, 0.5, 1.0}) {
      for (const auto& z : points1) {
        heat_error = std::max(heat_error, std::abs(heat_numeric(sampled_from_formal(f), z, t, gauss_hermite(10)) -
                                                   evaluate(hf, z, t)));
      }
    }
  }
  for (int trial = 0; trial < 5; ++trial) {
    const FormalSymbol f = random_symbol(rng, 2, 4);
    const std::vector<cd> z{{0.2, 0.1}, {-0.3, 0.4}};
    heat_error = std::max(heat_error, std::abs(heat_numeric(sampled_from_formal(f), z, 0.5, gauss_hermite(10)) -
                                               evaluate(heat_transform_formal(f), z, 0.5)));
  }
  return {moment_error <= 1e-12 && heat_error <= 1e-8,
          "moment error " + fmt(moment_error) + " (tol 1e-12), heat error " + fmt(heat_error) + " (tol 1e-8)"};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exact product expansion", 10, criterion1},
      {2, "combinatorial identity", 1, criterion2},
      {3, "moment oracle", 30, criterion3},
      {4, "sharp product of heat transforms", 60, criterion4},
      {5, "product expansion order", 60, criterion5},
      {6, "commutator expansion", 60, criterion6},
      {7, "heat intertwining", 60, criterion7},
      {8, "heat expansion", 10, criterion8},
      {9, "canonical commutation relations", 10, criterion9},
      {10, "quadrature fidelity", 5, criterion10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool ok = o.ok && in_time;
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail << "; "
              << fmt(seconds) << " s of " << fmt(c.budget_seconds) << " s" << (in_time ? "" : " (over budget)")
              << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
