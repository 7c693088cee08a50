#pragma once

#include <gmpxx.h>

#include "bargmann/gaussian_rational.hpp"
#include "bargmann/multiindex.hpp"

namespace bargmann {

/// sum_{m=0}^{p} (-1)^m (q-m+l)! / (m! (p-m)! (q-m)!), exact.
/// Throws std::invalid_argument unless q >= p >= 0 and l >= 0.
mpq_class comb_sum(int p, int q, int l);

/// Closed form of comb_sum: 0 if l < p, else l! (l+q-p)! / (q! p! (l-p)!).
mpq_class comb_closed(int p, int q, int l);

/// pi^{-2n} times the Gaussian double integral of v^alpha vbar^beta w^gamma wbar^eps
/// against exp(-vbar.w - |v|^2 - |w|^2), via the contour-integral closed form:
/// (-1)^{|alpha|-|beta|} alpha! eps! / (alpha-beta)! when alpha-beta = eps-gamma >= 0,
/// zero otherwise.
GaussianRational moment_double_closed(const MultiIndex& alpha, const MultiIndex& beta,
                                      const MultiIndex& gamma, const MultiIndex& eps);

/// Same quantity from the heat/sharp route at t = 1 and z = 0: the finite triple sum over
/// lambda, mu, nu of (-1)^|lambda| alpha! beta! gamma! eps! / (lambda! mu! nu!) subject to
/// alpha = mu+lambda, beta = mu, gamma = nu, eps = nu+lambda. Enumerates the index boxes
/// instead of solving the Kronecker constraints.
GaussianRational moment_double_remark(const MultiIndex& alpha, const MultiIndex& beta,
                                      const MultiIndex& gamma, const MultiIndex& eps);

}  // namespace bargmann
