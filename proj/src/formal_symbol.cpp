#include "bargmann/formal_symbol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bargmann/detail/ipow.hpp"

namespace bargmann {

namespace {

// beta! / (beta - alpha)!, componentwise product; zero when alpha > beta somewhere.
mpz_class falling(const MultiIndex& beta, const MultiIndex& alpha) {
  mpz_class r = 1;
  for (std::size_t j = 0; j < beta.dimension(); ++j) {
    if (alpha[j] > beta[j]) return 0;
    for (int m = 0; m < alpha[j]; ++m) r *= beta[j] - m;
  }
  return r;
}

MultiIndex componentwise_min(const MultiIndex& a, const MultiIndex& b) {
  std::vector<int> e(a.dimension());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = std::min(a[j], b[j]);
  return MultiIndex(std::move(e));
}

MultiIndex subtract(const MultiIndex& a, const MultiIndex& b) { return *try_subtract(a, b); }

// Unit Gaussian rational (+1 or -1) for (-1)^k.
GaussianRational sign_power(int k) { return (k % 2 == 0) ? GaussianRational(1) : GaussianRational(-1); }

// Multiplies by s^shift.
FormalSymbol shift_s(const FormalSymbol& f, int shift) {
  FormalSymbol r(f.dimension());
  for (const auto& [m, c] : f.terms()) r.add_term(Monomial{m.z, m.zbar, m.s_power + shift}, c);
  return r;
}

}  // namespace

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  if (auto c = z <=> o.z; c != 0) return c;
  if (auto c = zbar <=> o.zbar; c != 0) return c;
  return s_power <=> o.s_power;
}

mpq_class Valuation::value() const {
  if (infinite_) throw std::logic_error("Valuation::value on infinite valuation");
  mpq_class v(half_units_, 2);
  v.canonicalize();
  return v;
}

int Valuation::half_units() const {
  if (infinite_) throw std::logic_error("Valuation::half_units on infinite valuation");
  return half_units_;
}

bool Valuation::at_least(const mpq_class& v) const { return infinite_ || value() >= v; }

std::string Valuation::to_string() const { return infinite_ ? "inf" : value().get_str(); }

FormalSymbol::FormalSymbol(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("FormalSymbol: dimension must be >= 1");
}

FormalSymbol FormalSymbol::constant(std::size_t n, const GaussianRational& c) {
  return monomial(n, Monomial{MultiIndex(n), MultiIndex(n), 0}, c);
}

FormalSymbol FormalSymbol::z(std::size_t n, std::size_t j) {
  return monomial(n, Monomial{MultiIndex::unit(n, j), MultiIndex(n), 0});
}

FormalSymbol FormalSymbol::zbar(std::size_t n, std::size_t j) {
  return monomial(n, Monomial{MultiIndex(n), MultiIndex::unit(n, j), 0});
}

FormalSymbol FormalSymbol::t(std::size_t n) { return monomial(n, Monomial{MultiIndex(n), MultiIndex(n), 2}); }

FormalSymbol FormalSymbol::s(std::size_t n) { return monomial(n, Monomial{MultiIndex(n), MultiIndex(n), 1}); }

FormalSymbol FormalSymbol::monomial(std::size_t n, const Monomial& m, const GaussianRational& c) {
  FormalSymbol f(n);
  f.add_term(m, c);
  return f;
}

void FormalSymbol::add_term(const Monomial& m, const GaussianRational& c) {
  if (m.z.dimension() != n_ || m.zbar.dimension() != n_) {
    throw std::invalid_argument("FormalSymbol: monomial dimension mismatch");
  }
  if (m.s_power < 0) throw std::invalid_argument("FormalSymbol: negative s power");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GaussianRational FormalSymbol::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

int FormalSymbol::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool FormalSymbol::has_s() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.s_power != 0; });
}

bool FormalSymbol::is_holomorphic() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.zbar.is_zero(); });
}

MultiIndex FormalSymbol::max_z_exponents() const {
  std::vector<int> e(n_, 0);
  for (const auto& [m, c] : terms_) {
    for (std::size_t j = 0; j < n_; ++j) e[j] = std::max(e[j], m.z[j]);
  }
  return MultiIndex(std::move(e));
}

MultiIndex FormalSymbol::max_zbar_exponents() const {
  std::vector<int> e(n_, 0);
  for (const auto& [m, c] : terms_) {
    for (std::size_t j = 0; j < n_; ++j) e[j] = std::max(e[j], m.zbar[j]);
  }
  return MultiIndex(std::move(e));
}

void FormalSymbol::check_dimension(const FormalSymbol& o) const {
  if (o.n_ != n_) throw std::invalid_argument("FormalSymbol: dimension mismatch");
}

FormalSymbol& FormalSymbol::operator+=(const FormalSymbol& o) {
  check_dimension(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FormalSymbol& FormalSymbol::operator-=(const FormalSymbol& o) {
  check_dimension(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FormalSymbol& FormalSymbol::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

FormalSymbol FormalSymbol::operator-() const {
  FormalSymbol r = *this;
  r *= GaussianRational(-1);
  return r;
}

FormalSymbol operator*(const FormalSymbol& a, const FormalSymbol& b) {
  a.check_dimension(b);
  FormalSymbol r(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term(Monomial{ma.z + mb.z, ma.zbar + mb.zbar, ma.s_power + mb.s_power}, ca * cb);
    }
  }
  return r;
}

std::string FormalSymbol::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += c.to_string();
    for (std::size_t j = 0; j < n_; ++j) {
      if (m.z[j]) out += " * z" + std::to_string(j + 1) + "^" + std::to_string(m.z[j]);
    }
    for (std::size_t j = 0; j < n_; ++j) {
      if (m.zbar[j]) out += " * zbar" + std::to_string(j + 1) + "^" + std::to_string(m.zbar[j]);
    }
    if (m.s_power % 2 == 0) {
      if (m.s_power) out += " * t^" + std::to_string(m.s_power / 2);
    } else {
      out += " * s^" + std::to_string(m.s_power);
    }
  }
  return out;
}

FormalSymbol add(const FormalSymbol& f, const FormalSymbol& g) { return f + g; }

FormalSymbol multiply(const FormalSymbol& f, const FormalSymbol& g) { return f * g; }

FormalSymbol conjugate(const FormalSymbol& f) {
  FormalSymbol r(f.dimension());
  for (const auto& [m, c] : f.terms()) r.add_term(Monomial{m.zbar, m.z, m.s_power}, c.conj());
  return r;
}

FormalSymbol differentiate(const FormalSymbol& f, const MultiIndex& alpha, Wirtinger kind) {
  if (alpha.dimension() != f.dimension()) throw std::invalid_argument("differentiate: dimension mismatch");
  FormalSymbol r(f.dimension());
  for (const auto& [m, c] : f.terms()) {
    const MultiIndex& target = kind == Wirtinger::holomorphic ? m.z : m.zbar;
    mpz_class factor = falling(target, alpha);
    if (factor == 0) continue;
    Monomial d = m;
    (kind == Wirtinger::holomorphic ? d.z : d.zbar) = subtract(target, alpha);
    r.add_term(d, c * GaussianRational(mpq_class(factor)));
  }
  return r;
}

FormalSymbol laplacian(const FormalSymbol& f) {
  FormalSymbol r(f.dimension());
  for (std::size_t j = 0; j < f.dimension(); ++j) {
    MultiIndex e = MultiIndex::unit(f.dimension(), j);
    r += differentiate(differentiate(f, e, Wirtinger::antiholomorphic), e, Wirtinger::holomorphic);
  }
  return r;
}

FormalSymbol heat_transform_formal(const FormalSymbol& f, const mpq_class& scale) {
  FormalSymbol r(f.dimension());
  for (const auto& [m, c] : f.terms()) {
    for (const MultiIndex& gamma : enumerate_box(componentwise_min(m.z, m.zbar))) {
      const int g = gamma.degree();
      mpq_class weight(falling(m.z, gamma) * falling(m.zbar, gamma), factorial(gamma));
      weight.canonicalize();
      mpq_class scale_pow = 1;
      for (int i = 0; i < g; ++i) scale_pow *= scale;
      Monomial out{subtract(m.z, gamma), subtract(m.zbar, gamma), m.s_power + 2 * g};
      r.add_term(out, c * GaussianRational(weight * scale_pow));
    }
  }
  return r;
}

FormalSymbol sharp_formal(const FormalSymbol& f, const FormalSymbol& g, std::optional<int> cap) {
  if (f.dimension() != g.dimension()) throw std::invalid_argument("sharp_formal: dimension mismatch");
  FormalSymbol r(f.dimension());
  if (f.is_zero() || g.is_zero()) return r;
  for (const MultiIndex& alpha : enumerate_box(componentwise_min(f.max_z_exponents(), g.max_zbar_exponents()))) {
    const int a = alpha.degree();
    if (cap && a > *cap) continue;
    FormalSymbol term = differentiate(f, alpha, Wirtinger::holomorphic) *
                        differentiate(g, alpha, Wirtinger::antiholomorphic);
    if (term.is_zero()) continue;
    GaussianRational w = sign_power(a) * GaussianRational(mpq_class(1, factorial(alpha)));
    term *= w;
    r += shift_s(term, 2 * a);
  }
  return r;
}

FormalSymbol star_berezin(const FormalSymbol& f, const FormalSymbol& g, std::optional<int> cap) {
  if (f.dimension() != g.dimension()) throw std::invalid_argument("star_berezin: dimension mismatch");
  FormalSymbol r(f.dimension());
  if (f.is_zero() || g.is_zero()) return r;
  for (const MultiIndex& alpha : enumerate_box(componentwise_min(f.max_zbar_exponents(), g.max_z_exponents()))) {
    const int a = alpha.degree();
    if (cap && a > *cap) continue;
    FormalSymbol term = differentiate(f, alpha, Wirtinger::antiholomorphic) *
                        differentiate(g, alpha, Wirtinger::holomorphic);
    if (term.is_zero()) continue;
    term *= GaussianRational(mpq_class(1, factorial(alpha)));
    r += shift_s(term, 2 * a);
  }
  return r;
}

FormalSymbol poisson_bracket(const FormalSymbol& f, const FormalSymbol& g) {
  if (f.dimension() != g.dimension()) throw std::invalid_argument("poisson_bracket: dimension mismatch");
  FormalSymbol r(f.dimension());
  for (std::size_t j = 0; j < f.dimension(); ++j) {
    MultiIndex e = MultiIndex::unit(f.dimension(), j);
    r += differentiate(f, e, Wirtinger::holomorphic) * differentiate(g, e, Wirtinger::antiholomorphic);
    r -= differentiate(f, e, Wirtinger::antiholomorphic) * differentiate(g, e, Wirtinger::holomorphic);
  }
  r *= GaussianRational::i();
  return r;
}

std::complex<double> evaluate(const FormalSymbol& f, std::span<const std::complex<double>> z, double t) {
  if (!(t > 0)) throw std::invalid_argument("evaluate: t must be positive");
  if (z.size() != f.dimension()) throw std::invalid_argument("evaluate: point dimension mismatch");
  const double s = std::sqrt(t);
  std::complex<double> sum = 0;
  for (const auto& [m, c] : f.terms()) {
    std::complex<double> v = c.to_complex();
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (m.z[j]) v *= detail::ipow(z[j], m.z[j]);
      if (m.zbar[j]) v *= detail::ipow(std::conj(z[j]), m.zbar[j]);
    }
    if (m.s_power) v *= detail::ipow(s, m.s_power);
    sum += v;
  }
  return sum;
}

Valuation t_valuation(const FormalSymbol& f) {
  if (f.is_zero()) return Valuation::infinite();
  int h = f.terms().begin()->first.s_power;
  for (const auto& [m, c] : f.terms()) h = std::min(h, m.s_power);
  return Valuation::from_half_units(h);
}

FormalSymbol translate(const FormalSymbol& f, std::span<const GaussianRational> a) {
  const std::size_t n = f.dimension();
  if (a.size() != n) throw std::invalid_argument("translate: shift dimension mismatch");
  FormalSymbol r(n);
  for (const auto& [m, c] : f.terms()) {
    FormalSymbol term = FormalSymbol::monomial(n, Monomial{MultiIndex(n), MultiIndex(n), m.s_power}, c);
    for (std::size_t j = 0; j < n; ++j) {
      FormalSymbol zj = FormalSymbol::z(n, j) + FormalSymbol::constant(n, a[j]);
      FormalSymbol zbj = FormalSymbol::zbar(n, j) + FormalSymbol::constant(n, a[j].conj());
      for (int p = 0; p < m.z[j]; ++p) term = term * zj;
      for (int p = 0; p < m.zbar[j]; ++p) term = term * zbj;
    }
    r += term;
  }
  return r;
}

FormalSymbol random_symbol(std::mt19937_64& rng, std::size_t n, int max_degree, int max_terms) {
  if (max_degree < 0 || max_terms < 1) throw std::invalid_argument("random_symbol: bad parameters");
  std::uniform_int_distribution<int> term_count(1, max_terms);
  std::uniform_int_distribution<int> numerator(-3, 3);
  std::uniform_int_distribution<int> denominator(1, 3);
  std::uniform_int_distribution<int> degree_dist(0, max_degree);
  std::uniform_int_distribution<std::size_t> slot(0, 2 * n - 1);
  while (true) {
    FormalSymbol f(n);
    const int count = term_count(rng);
    for (int i = 0; i < count; ++i) {
      std::vector<int> ze(n, 0), zbe(n, 0);
      const int d = degree_dist(rng);
      for (int p = 0; p < d; ++p) {
        std::size_t k = slot(rng);
        if (k < n) {
          ++ze[k];
        } else {
          ++zbe[k - n];
        }
      }
      mpq_class re(numerator(rng), denominator(rng));
      mpq_class im(numerator(rng), denominator(rng));
      f.add_term(Monomial{MultiIndex(ze), MultiIndex(zbe), 0}, GaussianRational(re, im));
    }
    if (!f.is_zero()) return f;
  }
}

}  // namespace bargmann
