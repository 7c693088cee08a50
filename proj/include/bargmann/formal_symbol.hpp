#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "bargmann/gaussian_rational.hpp"
#include "bargmann/multiindex.hpp"

namespace bargmann {

enum class Wirtinger { holomorphic, antiholomorphic };

/// Exponent triple of z^z_exp * zbar^zbar_exp * s^s_power, where s = sqrt(t).
struct Monomial {
  MultiIndex z;
  MultiIndex zbar;
  int s_power = 0;

  int degree() const { return z.degree() + zbar.degree(); }

  /// Ordered by total degree, then z, zbar and s; drives serialization order.
  std::strong_ordering operator<=>(const Monomial& o) const;
  bool operator==(const Monomial&) const = default;
};

/// Lowest power of t in a formal symbol, in half-integer steps. The zero symbol
/// has valuation +infinity.
class Valuation {
 public:
  static Valuation infinite() { return Valuation(true, 0); }
  static Valuation from_half_units(int h) { return Valuation(false, h); }

  bool is_infinite() const { return infinite_; }
  /// Valuation in units of t; throws std::logic_error when infinite.
  mpq_class value() const;
  int half_units() const;
  /// True iff the valuation is >= v (always true when infinite).
  bool at_least(const mpq_class& v) const;
  std::string to_string() const;

  bool operator==(const Valuation&) const = default;

 private:
  Valuation(bool inf, int h) : infinite_(inf), half_units_(h) {}
  bool infinite_;
  int half_units_;
};

/// Exact polynomial in z, zbar and s (s^2 = t) with Gaussian-rational
/// coefficients. Canonical: no stored coefficient is zero.
class FormalSymbol {
 public:
  using TermMap = std::map<Monomial, GaussianRational>;

  /// The zero symbol on C^n.
  explicit FormalSymbol(std::size_t n);

  static FormalSymbol constant(std::size_t n, const GaussianRational& c);
  /// z_j, with j zero-based.
  static FormalSymbol z(std::size_t n, std::size_t j);
  static FormalSymbol zbar(std::size_t n, std::size_t j);
  /// The deformation parameter t = s^2.
  static FormalSymbol t(std::size_t n);
  static FormalSymbol s(std::size_t n);
  static FormalSymbol monomial(std::size_t n, const Monomial& m, const GaussianRational& c = 1);

  std::size_t dimension() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * m, dropping the entry if the coefficient cancels.
  void add_term(const Monomial& m, const GaussianRational& c);
  GaussianRational coefficient(const Monomial& m) const;

  /// Largest |z exp| + |zbar exp| over terms; -1 for the zero symbol.
  int degree() const;
  bool has_s() const;
  bool is_holomorphic() const;
  /// Componentwise maxima of the z (resp. zbar) exponents.
  MultiIndex max_z_exponents() const;
  MultiIndex max_zbar_exponents() const;

  FormalSymbol& operator+=(const FormalSymbol& o);
  FormalSymbol& operator-=(const FormalSymbol& o);
  FormalSymbol& operator*=(const GaussianRational& c);
  FormalSymbol operator-() const;

  friend FormalSymbol operator+(FormalSymbol a, const FormalSymbol& b) { return a += b; }
  friend FormalSymbol operator-(FormalSymbol a, const FormalSymbol& b) { return a -= b; }
  friend FormalSymbol operator*(const FormalSymbol& a, const FormalSymbol& b);
  friend FormalSymbol operator*(FormalSymbol a, const GaussianRational& c) { return a *= c; }
  friend FormalSymbol operator*(const GaussianRational& c, FormalSymbol a) { return a *= c; }

  bool operator==(const FormalSymbol&) const = default;

  /// Canonical text, e.g. "(1 + 0 i) * z1^1 * zbar1^1 + (-1 + 0 i) * t^1".
  std::string to_string() const;

 private:
  void check_dimension(const FormalSymbol& o) const;

  std::size_t n_;
  TermMap terms_;
};

FormalSymbol add(const FormalSymbol& f, const FormalSymbol& g);
FormalSymbol multiply(const FormalSymbol& f, const FormalSymbol& g);

/// Swaps z and zbar exponents and conjugates coefficients; s is real.
FormalSymbol conjugate(const FormalSymbol& f);

/// Wirtinger derivative d^alpha (holomorphic) or dbar^alpha (antiholomorphic).
FormalSymbol differentiate(const FormalSymbol& f, const MultiIndex& alpha, Wirtinger kind);

/// Laplacian sum_j d_j dbar_j f.
FormalSymbol laplacian(const FormalSymbol& f);

/// Heat transform at parameter scale*t: sum_gamma ((scale t)^|gamma| / gamma!)
/// d^gamma dbar^gamma f. Finite and exact on polynomials.
FormalSymbol heat_transform_formal(const FormalSymbol& f, const mpq_class& scale = 1);

/// f #_t g = sum_alpha ((-t)^|alpha| / alpha!) (d^alpha f)(dbar^alpha g), restricted
/// to |alpha| <= cap when a cap is given.
FormalSymbol sharp_formal(const FormalSymbol& f, const FormalSymbol& g,
                          std::optional<int> cap = std::nullopt);

/// f *_B g = sum_alpha (t^|alpha| / alpha!) (dbar^alpha f)(d^alpha g), |alpha| <= cap.
FormalSymbol star_berezin(const FormalSymbol& f, const FormalSymbol& g,
                          std::optional<int> cap = std::nullopt);

/// {f,g} = i sum_j (d_j f dbar_j g - dbar_j f d_j g).
FormalSymbol poisson_bracket(const FormalSymbol& f, const FormalSymbol& g);

/// Numeric value at z in C^n with s = sqrt(t). Throws std::invalid_argument when
/// t <= 0 or the point has the wrong dimension.
std::complex<double> evaluate(const FormalSymbol& f, std::span<const std::complex<double>> z, double t);

Valuation t_valuation(const FormalSymbol& f);

/// f(. + a), re-expanded binomially.
FormalSymbol translate(const FormalSymbol& f, std::span<const GaussianRational> a);

/// Seeded random polynomial in z, zbar (no s) with total degree <= max_degree
/// and small Gaussian-rational coefficients. Never returns the zero symbol.
FormalSymbol random_symbol(std::mt19937_64& rng, std::size_t n, int max_degree, int max_terms = 4);

}  // namespace bargmann
