#pragma once

#include "polycauchy/rational.hpp"

#include <stdexcept>

namespace polycauchy {

inline Int factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int f = 1;
  for (long long i = 2; i <= n; ++i) f *= i;
  return f;
}

// C(n, k) for integer n >= 0; zero outside 0 <= k <= n.
inline Int binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Int c = 1;
  for (long long i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;  // exact at every step
  }
  return c;
}

// C(z, n) for rational z by the falling-factorial product z(z-1)...(z-n+1)/n!.
inline Rational binomial(const Rational& z, long long n) {
  if (n < 0) return Rational(0);
  Rational c(1);
  for (long long i = 0; i < n; ++i) c *= (z - Rational(i)) / Rational(i + 1);
  return c;
}

// n(n-1)...(n-l+1); the empty product is 1.
inline Int falling_factorial(long long n, long long l) {
  Int p = 1;
  for (long long i = 0; i < l; ++i) p *= n - i;
  return p;
}

inline Int int_pow(Int base, unsigned long long e) {
  Int r = 1;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace polycauchy
