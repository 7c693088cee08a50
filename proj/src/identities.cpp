#include "bargmann/identities.hpp"

#include <stdexcept>

namespace bargmann {

namespace {

mpz_class fact(int k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

void check_dims(const MultiIndex& a, const MultiIndex& b, const MultiIndex& c, const MultiIndex& d) {
  if (a.dimension() != b.dimension() || a.dimension() != c.dimension() || a.dimension() != d.dimension()) {
    throw std::invalid_argument("moment: dimension mismatch");
  }
}

}  // namespace

mpq_class comb_sum(int p, int q, int l) {
  if (p < 0 || l < 0 || q < p) throw std::invalid_argument("comb_sum: requires q >= p >= 0 and l >= 0");
  mpq_class sum = 0;
  for (int m = 0; m <= p; ++m) {
    mpq_class term(fact(q - m + l), fact(m) * fact(p - m) * fact(q - m));
    term.canonicalize();
    if (m % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

mpq_class comb_closed(int p, int q, int l) {
  if (p < 0 || l < 0 || q < p) throw std::invalid_argument("comb_closed: requires q >= p >= 0 and l >= 0");
  if (l < p) return 0;
  mpq_class r(fact(l) * fact(l + q - p), fact(q) * fact(p) * fact(l - p));
  r.canonicalize();
  return r;
}

GaussianRational moment_double_closed(const MultiIndex& alpha, const MultiIndex& beta,
                                      const MultiIndex& gamma, const MultiIndex& eps) {
  check_dims(alpha, beta, gamma, eps);
  auto lhs = try_subtract(alpha, beta);
  auto rhs = try_subtract(eps, gamma);
  if (!lhs || !rhs || *lhs != *rhs) return 0;
  mpq_class v(factorial(alpha) * factorial(eps), factorial(*lhs));
  v.canonicalize();
  if ((alpha.degree() - beta.degree()) % 2) v = -v;
  return GaussianRational(v);
}

GaussianRational moment_double_remark(const MultiIndex& alpha, const MultiIndex& beta,
                                      const MultiIndex& gamma, const MultiIndex& eps) {
  check_dims(alpha, beta, gamma, eps);
  const mpz_class numerator = factorial(alpha) * factorial(beta) * factorial(gamma) * factorial(eps);
  // lambda <= alpha, mu <= alpha, nu <= eps bound every surviving term.
  mpq_class sum = 0;
  for (const MultiIndex& lambda : enumerate_box(alpha)) {
    for (const MultiIndex& mu : enumerate_box(alpha)) {
      if (mu + lambda != alpha || mu != beta) continue;
      for (const MultiIndex& nu : enumerate_box(eps)) {
        if (nu != gamma || nu + lambda != eps) continue;
        mpq_class term(numerator, factorial(lambda) * factorial(mu) * factorial(nu));
        term.canonicalize();
        if (lambda.degree() % 2) {
          sum -= term;
        } else {
          sum += term;
        }
      }
    }
  }
  return GaussianRational(sum);
}

}  // namespace bargmann
