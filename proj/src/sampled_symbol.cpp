#include "bargmann/sampled_symbol.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "bargmann/detail/ipow.hpp"

namespace bargmann {

namespace {

using cd = std::complex<double>;

// A first-order Wirtinger operator written over the 2n real coordinates:
// direction 2j is Re z_j, 2j+1 is Im z_j.
struct RealDirection {
  std::size_t axis;
  cd coefficient;
};

std::vector<RealDirection> wirtinger_directions(std::size_t j, bool holomorphic) {
  const cd half_i(0.0, holomorphic ? -0.5 : 0.5);
  return {{2 * j, 0.5}, {2 * j + 1, half_i}};
}

void shift(std::vector<cd>& z, std::size_t axis, double h) {
  if (axis % 2 == 0) {
    z[axis / 2] += h;
  } else {
    z[axis / 2] += cd(0.0, h);
  }
}

cd partial1(const SymbolFunction& f, std::vector<cd> z, std::size_t r, double h) {
  std::vector<cd> zp = z, zm = z;
  shift(zp, r, h);
  shift(zm, r, -h);
  return (f(zp) - f(zm)) / (2 * h);
}

cd partial2(const SymbolFunction& f, const std::vector<cd>& z, std::size_t r, std::size_t s, double h) {
  if (r == s) {
    std::vector<cd> zp = z, zm = z;
    shift(zp, r, h);
    shift(zm, r, -h);
    return (f(zp) - 2.0 * f(z) + f(zm)) / (h * h);
  }
  auto at = [&](double a, double b) {
    std::vector<cd> w = z;
    shift(w, r, a);
    shift(w, s, b);
    return f(w);
  };
  return (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4 * h * h);
}

double binomial(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double multi_binomial(const MultiIndex& a, const MultiIndex& b) {
  double r = 1;
  for (std::size_t j = 0; j < a.dimension(); ++j) r *= binomial(a[j], b[j]);
  return r;
}

MultiIndex minus(const MultiIndex& a, const MultiIndex& b) { return *try_subtract(a, b); }

std::optional<SymbolFunction> derivative_function(const SampledSymbol& f, const MultiIndex& hol,
                                                  const MultiIndex& antihol) {
  if (hol.is_zero() && antihol.is_zero()) return f.function();
  if (!f.derivative_provider()) return std::nullopt;
  return f.derivative_provider()(hol, antihol);
}

void check_same_dimension(const SampledSymbol& f, const SampledSymbol& g) {
  if (f.dimension() != g.dimension()) throw std::invalid_argument("SampledSymbol: dimension mismatch");
}

}  // namespace

SampledSymbol::SampledSymbol(std::size_t n, SymbolFunction value, DerivativeProvider derivative,
                             std::optional<double> sup_bound, std::string label)
    : n_(n),
      value_(std::move(value)),
      derivative_(std::move(derivative)),
      sup_bound_(sup_bound),
      label_(std::move(label)) {
  if (n_ == 0) throw std::invalid_argument("SampledSymbol: dimension must be >= 1");
  if (!value_) throw std::invalid_argument("SampledSymbol: missing value callback");
}

SampledSymbol SampledSymbol::derivative(const MultiIndex& hol, const MultiIndex& antihol) const {
  if (hol.dimension() != n_ || antihol.dimension() != n_) {
    throw std::invalid_argument("SampledSymbol::derivative: dimension mismatch");
  }
  if (hol.is_zero() && antihol.is_zero()) return *this;

  if (derivative_) {
    if (auto fn = derivative_(hol, antihol)) {
      DerivativeProvider parent = derivative_;
      DerivativeProvider shifted = [parent, hol, antihol](const MultiIndex& a, const MultiIndex& b) {
        return parent(hol + a, antihol + b);
      };
      return SampledSymbol(n_, std::move(*fn), std::move(shifted), std::nullopt, label_);
    }
  }

  const int order = hol.degree() + antihol.degree();
  if (fd_order_ + order > 2) {
    throw std::domain_error("SampledSymbol::derivative: no analytic derivative and finite differences are "
                            "limited to order 2");
  }
  std::vector<std::vector<RealDirection>> ops;
  for (std::size_t j = 0; j < n_; ++j) {
    for (int k = 0; k < hol[j]; ++k) ops.push_back(wirtinger_directions(j, true));
    for (int k = 0; k < antihol[j]; ++k) ops.push_back(wirtinger_directions(j, false));
  }
  SymbolFunction f = value_;
  const double h = kFiniteDifferenceStep;
  SymbolFunction fd;
  if (ops.size() == 1) {
    fd = [f, op = ops[0], h](Point z) {
      std::vector<cd> p(z.begin(), z.end());
      cd sum = 0;
      for (const auto& d : op) sum += d.coefficient * partial1(f, p, d.axis, h);
      return sum;
    };
  } else {
    fd = [f, a = ops[0], b = ops[1], h](Point z) {
      std::vector<cd> p(z.begin(), z.end());
      cd sum = 0;
      for (const auto& da : a) {
        for (const auto& db : b) sum += da.coefficient * db.coefficient * partial2(f, p, da.axis, db.axis, h);
      }
      return sum;
    };
  }
  SampledSymbol out(n_, std::move(fd), {}, std::nullopt, label_);
  out.fd_order_ = fd_order_ + order;
  return out;
}

SampledSymbol operator*(const SampledSymbol& f, const SampledSymbol& g) {
  check_same_dimension(f, g);
  const std::size_t n = f.dimension();
  SymbolFunction fv = f.function(), gv = g.function();
  DerivativeProvider provider;
  if (f.derivative_provider() && g.derivative_provider()) {
    provider = [f, g](const MultiIndex& hol, const MultiIndex& antihol) -> std::optional<SymbolFunction> {
      struct Piece {
        double weight;
        SymbolFunction a, b;
      };
      std::vector<Piece> pieces;
      for (const MultiIndex& h1 : enumerate_box(hol)) {
        for (const MultiIndex& a1 : enumerate_box(antihol)) {
          auto fa = derivative_function(f, h1, a1);
          auto gb = derivative_function(g, minus(hol, h1), minus(antihol, a1));
          if (!fa || !gb) return std::nullopt;
          pieces.push_back({multi_binomial(hol, h1) * multi_binomial(antihol, a1), *fa, *gb});
        }
      }
      return [pieces = std::move(pieces)](Point z) {
        cd sum = 0;
        for (const auto& p : pieces) sum += p.weight * p.a(z) * p.b(z);
        return sum;
      };
    };
  }
  std::optional<double> bound;
  if (f.sup_bound() && g.sup_bound()) bound = *f.sup_bound() * *g.sup_bound();
  std::string label = "(" + f.label() + ")*(" + g.label() + ")";
  return SampledSymbol(n, [fv, gv](Point z) { return fv(z) * gv(z); }, std::move(provider), bound,
                       std::move(label));
}

namespace {

SampledSymbol linear_combination(const SampledSymbol& f, cd cf, const SampledSymbol& g, cd cg,
                                 std::string label) {
  check_same_dimension(f, g);
  SymbolFunction fv = f.function(), gv = g.function();
  DerivativeProvider provider;
  if (f.derivative_provider() && g.derivative_provider()) {
    provider = [f, g, cf, cg](const MultiIndex& hol, const MultiIndex& antihol) -> std::optional<SymbolFunction> {
      auto fa = derivative_function(f, hol, antihol);
      auto gb = derivative_function(g, hol, antihol);
      if (!fa || !gb) return std::nullopt;
      return [fa = *fa, gb = *gb, cf, cg](Point z) { return cf * fa(z) + cg * gb(z); };
    };
  }
  std::optional<double> bound;
  if (f.sup_bound() && g.sup_bound()) bound = std::abs(cf) * *f.sup_bound() + std::abs(cg) * *g.sup_bound();
  return SampledSymbol(f.dimension(), [fv, gv, cf, cg](Point z) { return cf * fv(z) + cg * gv(z); },
                       std::move(provider), bound, std::move(label));
}

}  // namespace

SampledSymbol operator+(const SampledSymbol& f, const SampledSymbol& g) {
  return linear_combination(f, 1.0, g, 1.0, f.label() + " + " + g.label());
}

SampledSymbol operator-(const SampledSymbol& f, const SampledSymbol& g) {
  return linear_combination(f, 1.0, g, -1.0, f.label() + " - (" + g.label() + ")");
}

SampledSymbol scaled(const SampledSymbol& f, cd c) {
  SymbolFunction fv = f.function();
  DerivativeProvider provider;
  if (f.derivative_provider()) {
    provider = [f, c](const MultiIndex& hol, const MultiIndex& antihol) -> std::optional<SymbolFunction> {
      auto fa = derivative_function(f, hol, antihol);
      if (!fa) return std::nullopt;
      return [fa = *fa, c](Point z) { return c * fa(z); };
    };
  }
  std::optional<double> bound;
  if (f.sup_bound()) bound = std::abs(c) * *f.sup_bound();
  return SampledSymbol(f.dimension(), [fv, c](Point z) { return c * fv(z); }, std::move(provider), bound,
                       f.label());
}

SampledSymbol sampled_from_formal(const FormalSymbol& f) {
  if (f.has_s()) throw std::invalid_argument("sampled_from_formal: symbol depends on t");
  auto value = [f](Point z) { return evaluate(f, z, 1.0); };
  DerivativeProvider provider = [f](const MultiIndex& hol, const MultiIndex& antihol) -> std::optional<SymbolFunction> {
    FormalSymbol d = differentiate(differentiate(f, hol, Wirtinger::holomorphic), antihol, Wirtinger::antiholomorphic);
    return [d](Point z) { return evaluate(d, z, 1.0); };
  };
  return SampledSymbol(f.dimension(), std::move(value), std::move(provider), std::nullopt, f.to_string());
}

SampledSymbol plane_wave(std::size_t n, std::vector<double> a, std::vector<double> b, cd amplitude) {
  if (a.size() != n || b.size() != n) throw std::invalid_argument("plane_wave: frequency dimension mismatch");
  std::vector<cd> dz(n), dzbar(n);
  for (std::size_t j = 0; j < n; ++j) {
    dz[j] = cd(b[j], a[j]) / 2.0;      // (i a + b) / 2
    dzbar[j] = cd(-b[j], a[j]) / 2.0;  // (i a - b) / 2
  }
  auto phase = [a, b](Point z) {
    double p = 0;
    for (std::size_t j = 0; j < a.size(); ++j) p += a[j] * z[j].real() + b[j] * z[j].imag();
    return p;
  };
  auto value = [phase, amplitude](Point z) { return amplitude * std::polar(1.0, phase(z)); };
  DerivativeProvider provider = [phase, amplitude, dz, dzbar](const MultiIndex& hol,
                                                               const MultiIndex& antihol) -> std::optional<SymbolFunction> {
    cd factor = amplitude;
    for (std::size_t j = 0; j < dz.size(); ++j) factor *= detail::ipow(dz[j], hol[j]) * detail::ipow(dzbar[j], antihol[j]);
    return [phase, factor](Point z) { return factor * std::polar(1.0, phase(z)); };
  };
  return SampledSymbol(n, std::move(value), std::move(provider), std::abs(amplitude), "plane_wave");
}

namespace {

std::vector<double> axis_vector(std::size_t n, std::size_t j, double v) {
  if (j >= n) throw std::out_of_range("built-in symbol: coordinate index out of range");
  std::vector<double> e(n, 0.0);
  e[j] = v;
  return e;
}

SampledSymbol labelled(SampledSymbol s, std::string label, double bound) {
  return SampledSymbol(s.dimension(), s.function(), s.derivative_provider(), bound, std::move(label));
}

}  // namespace

SampledSymbol cos_re(std::size_t n, std::size_t j, double frequency) {
  auto zero = std::vector<double>(n, 0.0);
  auto p = plane_wave(n, axis_vector(n, j, frequency), zero, 0.5);
  auto m = plane_wave(n, axis_vector(n, j, -frequency), zero, 0.5);
  return labelled(p + m, "cos(re(z" + std::to_string(j + 1) + "))", 1.0);
}

SampledSymbol sin_re(std::size_t n, std::size_t j, double frequency) {
  auto zero = std::vector<double>(n, 0.0);
  auto p = plane_wave(n, axis_vector(n, j, frequency), zero, cd(0.0, -0.5));
  auto m = plane_wave(n, axis_vector(n, j, -frequency), zero, cd(0.0, 0.5));
  return labelled(p + m, "sin(re(z" + std::to_string(j + 1) + "))", 1.0);
}

SampledSymbol cos_im(std::size_t n, std::size_t j, double frequency) {
  auto zero = std::vector<double>(n, 0.0);
  auto p = plane_wave(n, zero, axis_vector(n, j, frequency), 0.5);
  auto m = plane_wave(n, zero, axis_vector(n, j, -frequency), 0.5);
  return labelled(p + m, "cos(im(z" + std::to_string(j + 1) + "))", 1.0);
}

SampledSymbol sin_im(std::size_t n, std::size_t j, double frequency) {
  auto zero = std::vector<double>(n, 0.0);
  auto p = plane_wave(n, zero, axis_vector(n, j, frequency), cd(0.0, -0.5));
  auto m = plane_wave(n, zero, axis_vector(n, j, -frequency), cd(0.0, 0.5));
  return labelled(p + m, "sin(im(z" + std::to_string(j + 1) + "))", 1.0);
}

SampledSymbol gaussian_bump(std::size_t n, double c, std::vector<cd> center) {
  if (!(c > 0)) throw std::invalid_argument("gaussian_bump: c must be positive");
  if (center.size() != n) throw std::invalid_argument("gaussian_bump: center dimension mismatch");
  auto value = [c, center](Point z) {
    double r2 = 0;
    for (std::size_t j = 0; j < center.size(); ++j) r2 += std::norm(z[j] - center[j]);
    return cd(std::exp(-c * r2), 0.0);
  };
  DerivativeProvider provider = [c, center](const MultiIndex& hol, const MultiIndex& antihol) -> std::optional<SymbolFunction> {
    return [c, center, hol, antihol](Point z) {
      cd result = 1.0;
      for (std::size_t j = 0; j < center.size(); ++j) {
        const cd w = z[j] - center[j];
        const int a = hol[j], b = antihol[j];
        // d^a dbar^b exp(-c w wbar) = (-c)^b sum_m C(a,m) b!/(b-m)! w^(b-m) (-c wbar)^(a-m) exp(-c|w|^2)
        cd sum = 0;
        double falling = 1;
        for (int m = 0; m <= std::min(a, b); ++m) {
          if (m > 0) falling *= b - m + 1;
          sum += binomial(a, m) * falling * detail::ipow(w, b - m) * detail::ipow(-c * std::conj(w), a - m);
        }
        result *= detail::ipow(-c, b) * sum * std::exp(-c * std::norm(w));
      }
      return result;
    };
  };
  return SampledSymbol(n, std::move(value), std::move(provider), 1.0, "gaussian_bump");
}

}  // namespace bargmann
