#include "polycauchy/sequences.hpp"

#include "polycauchy/binomial.hpp"
#include "polycauchy/power_series.hpp"
#include "polycauchy/stirling.hpp"

#include <stdexcept>

namespace polycauchy {

Rational poly_cauchy_first(int n, int k) {
  if (n < 0) throw std::invalid_argument("poly_cauchy_first: negative n");
  if (n == 0) return Rational(1);
  Rational sum(0);
  for (int l = 1; l <= n; ++l) {
    Rational term(((n - l) % 2 == 0 ? Int(1) : Int(-1)) * stirling1(n, l));
    sum += term * Rational(Int(l + 1)).pow(-static_cast<long long>(k));
  }
  return sum;
}

Rational poly_cauchy_second(int n, int k) {
  if (n < 0) throw std::invalid_argument("poly_cauchy_second: negative n");
  Rational sum(0);
  for (int m = 0; m <= n; ++m) {
    Rational term(stirling1(n, m));
    sum += term * Rational(Int(m + 1)).pow(-static_cast<long long>(k));
  }
  return n % 2 == 0 ? sum : -sum;
}

Rational poly_cauchy(PolyCauchyKind kind, int n, int k) {
  return kind == PolyCauchyKind::first ? poly_cauchy_first(n, k)
                                       : poly_cauchy_second(n, k);
}

PolyCauchySpec PolyCauchySpec::number(PolyCauchyKind kind, int k) {
  return PolyCauchySpec{kind, k, Variant::number, Rational(0), Rational(1)};
}

PolyCauchySpec PolyCauchySpec::polynomial(PolyCauchyKind kind, int k, Rational z) {
  return PolyCauchySpec{kind, k, Variant::polynomial, std::move(z), Rational(1)};
}

PolyCauchySpec PolyCauchySpec::shifted(PolyCauchyKind kind, int k, Rational alpha) {
  if (alpha.sign() <= 0)
    throw std::invalid_argument("PolyCauchySpec: alpha must be positive");
  return PolyCauchySpec{kind, k, Variant::shifted, Rational(0), std::move(alpha)};
}

Rational PolyCauchySpec::value(int n) const {
  switch (variant) {
    case Variant::number: return poly_cauchy(kind, n, k);
    case Variant::polynomial: return poly_cauchy_poly(kind, n, k).eval(z);
    case Variant::shifted: return shifted_poly_cauchy(kind, n, k, alpha);
  }
  throw std::invalid_argument("PolyCauchySpec: unknown variant");
}

RatPolynomial poly_cauchy_poly(PolyCauchyKind kind, int n, int k) {
  if (n < 0) throw std::invalid_argument("poly_cauchy_poly: negative n");
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int m = 0; m <= n; ++m) {
    Int s = stirling1(n, m);
    if (s == 0) continue;
    int par = kind == PolyCauchyKind::first ? (n - m) % 2 : n % 2;
    Rational outer(par == 0 ? s : Int(-s));
    for (int i = 0; i <= m; ++i) {
      coeffs[static_cast<std::size_t>(m - i)] +=
          outer * Rational(binomial(m, i)) * Rational(Int(i + 1)).pow(-static_cast<long long>(k));
    }
  }
  return RatPolynomial(std::move(coeffs));
}

Rational shifted_poly_cauchy(PolyCauchyKind kind, int n, int k, const Rational& alpha) {
  if (n < 0) throw std::invalid_argument("shifted_poly_cauchy: negative n");
  if (alpha.sign() <= 0)
    throw std::invalid_argument("shifted_poly_cauchy: alpha must be positive");
  Rational sum(0);
  for (int m = 0; m <= n; ++m) {
    Int s = stirling1(n, m);
    if (s == 0) continue;
    int par = kind == PolyCauchyKind::first ? (n - m) % 2 : n % 2;
    Rational term(par == 0 ? s : Int(-s));
    sum += term * (Rational(m) + alpha).pow(-static_cast<long long>(k));
  }
  return sum;
}

std::vector<Rational> poly_cauchy_series_prefix(PolyCauchyKind kind, int k,
                                                const Rational& z, int n_max) {
  if (n_max < 0) throw std::invalid_argument("poly_cauchy_series_prefix: negative n_max");
  PowerSeries inner = log1p_series(n_max);
  if (kind == PolyCauchyKind::second) inner = inner * Rational(-1);
  PowerSeries composed = lif_series(k, n_max).compose(inner);
  PowerSeries scaled =
      scale_binomial(composed, z, kind == PolyCauchyKind::first ? 1 : -1);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  Rational fact(1);
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) fact *= Rational(n);
    out.push_back(scaled[static_cast<std::size_t>(n)] * fact);
  }
  return out;
}

Rational poly_cauchy_via_series(PolyCauchyKind kind, int n, int k, const Rational& z) {
  if (n < 0) throw std::invalid_argument("poly_cauchy_via_series: negative n");
  return poly_cauchy_series_prefix(kind, k, z, n).back();
}

Rational harmonic(int n, int k) {
  if (n < 0) throw std::invalid_argument("harmonic: negative n");
  if (k < 1) throw std::invalid_argument("harmonic: order k must be >= 1");
  Rational sum(0);
  for (int i = 1; i <= n; ++i)
    sum += Rational(Int(1), int_pow(Int(i), static_cast<unsigned long long>(k)));
  return sum;
}

Rational bell_omega(std::span<const Rational> t, int i) {
  if (i < 0) throw std::invalid_argument("bell_omega: negative index");
  if (static_cast<std::size_t>(i) > t.size())
    throw std::invalid_argument("bell_omega: not enough t arguments");
  std::vector<Rational> omega{Rational(1)};
  for (int m = 0; m < i; ++m) {
    Rational next(0);
    for (int j = 0; j <= m; ++j)
      next += Rational(binomial(m, j)) * t[static_cast<std::size_t>(j)] *
              omega[static_cast<std::size_t>(m - j)];
    omega.push_back(next);
  }
  return omega[static_cast<std::size_t>(i)];
}

Rational bell_omega_power_sum(std::span<const Rational> t, int i) {
  std::vector<Rational> scaled(t.begin(), t.end());
  Rational f(1);
  for (std::size_t j = 0; j < scaled.size(); ++j) {
    if (j > 0) f *= Rational(static_cast<long long>(j));
    scaled[j] *= f;  // (j)! on the (j+1)-th argument
  }
  return bell_omega(scaled, i);
}

bool harmonic_bell_identity(int m, int n, int i) {
  if (m < 1 || n < 0 || i < 0)
    throw std::invalid_argument("harmonic_bell_identity: requires m >= 1, n >= 0, i >= 0");
  Rational lhs(0);
  for (int j = 0; j <= n; ++j) {
    Rational term(j % 2 == 0 ? binomial(n, j) : Int(-binomial(n, j)));
    lhs += term * Rational(Int(m + j)).pow(-(static_cast<long long>(i) + 1));
  }
  lhs *= Rational(factorial(i) * m * binomial(m + n, n));

  std::vector<Rational> t;
  for (int j = 1; j <= std::max(i, 1); ++j) t.push_back(harmonic(m + n, j) - harmonic(m - 1, j));
  return lhs == bell_omega_power_sum(t, i);
}

}  // namespace polycauchy
