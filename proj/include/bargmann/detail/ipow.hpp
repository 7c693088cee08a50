#pragma once

#include <complex>

namespace bargmann::detail {

/// x^k by repeated squaring; ipow(x, 0) == 1 including x == 0.
template <class T>
T ipow(T x, int k) {
  T r(1);
  while (k > 0) {
    if (k & 1) r *= x;
    x *= x;
    k >>= 1;
  }
  return r;
}

}  // namespace bargmann::detail
