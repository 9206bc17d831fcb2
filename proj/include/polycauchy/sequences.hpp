#pragma once

#include "polycauchy/polynomial.hpp"
#include "polycauchy/rational.hpp"

#include <span>
#include <vector>

namespace polycauchy {

enum class PolyCauchyKind { first, second };

/*
 * One member of the poly-Cauchy family: a plain number, a polynomial value
 * at a rational point z, or an alpha-shifted number.  The plain number is
 * the polynomial variant at z = 0 and the shifted variant at alpha = 1.
 */
struct PolyCauchySpec {
  enum class Variant { number, polynomial, shifted };

  PolyCauchyKind kind = PolyCauchyKind::first;
  int k = 1;
  Variant variant = Variant::number;
  Rational z;               // polynomial evaluation point
  Rational alpha{1};        // shift, must stay positive

  static PolyCauchySpec number(PolyCauchyKind kind, int k);
  static PolyCauchySpec polynomial(PolyCauchyKind kind, int k, Rational z);
  static PolyCauchySpec shifted(PolyCauchyKind kind, int k, Rational alpha);

  Rational value(int n) const;
};

/// c_n^(k) = sum_{l=1..n} (-1)^{n-l} [n,l] / (l+1)^k,  c_0^(k) = 1.
/// Any integer k; negative k turns the denominators into exact powers.
Rational poly_cauchy_first(int n, int k);

/// chat_n^(k) = (-1)^n sum_{m=0..n} [n,m] / (m+1)^k.
Rational poly_cauchy_second(int n, int k);

Rational poly_cauchy(PolyCauchyKind kind, int n, int k);

/// The degree-<=n polynomial in z with c_n^(k)(0) (resp. chat) equal to the
/// plain numbers.
RatPolynomial poly_cauchy_poly(PolyCauchyKind kind, int n, int k);

/// Shifted numbers: the (m+1)^k denominators are replaced by (m+alpha)^k.
/// Requires alpha > 0; alpha = 1 reproduces the unshifted numbers.
Rational shifted_poly_cauchy(PolyCauchyKind kind, int n, int k, const Rational& alpha);

/// Definitional oracle: n! times the x^n coefficient of
///   (1+x)^z   Lif_k( log(1+x))   (first kind)
///   (1+x)^-z  Lif_k(-log(1+x))   (second kind)
/// at truncation order n.  Independent of the Stirling-sum route.
Rational poly_cauchy_via_series(PolyCauchyKind kind, int n, int k, const Rational& z);

/// All of poly_cauchy_via_series(kind, n, k, z) for n = 0..n_max from a
/// single order-n_max series; identical values, one composition.
std::vector<Rational> poly_cauchy_series_prefix(PolyCauchyKind kind, int k,
                                                const Rational& z, int n_max);

/// H_n^(k) = sum_{i=1..n} 1/i^k; requires k >= 1.
Rational harmonic(int n, int k);

/// Complete Bell polynomial: coefficient of x^i/i! in exp(sum_k t_k x^k/k!),
/// by the recurrence Omega_{m+1} = sum_j C(m,j) t_{j+1} Omega_{m-j}.
/// Requires t.size() >= i.
Rational bell_omega(std::span<const Rational> t, int i);

/// Bell polynomial for the exp(sum_k t_k x^k / k) normalization — the form
/// the harmonic-number identities use; equals bell_omega at ((j-1)! t_j).
Rational bell_omega_power_sum(std::span<const Rational> t, int i);

/// i! m C(m+n,n) sum_k (-1)^k C(n,k)/(m+k)^{i+1}
///   == Omega_i at t_j = H_{m+n}^(j) - H_{m-1}^(j)  (power-sum normalization).
bool harmonic_bell_identity(int m, int n, int i);

}  // namespace polycauchy
