#pragma once

#include "polycauchy/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace polycauchy {

/*
 * Truncated formal power series over Rational.
 *
 * A series of order N stores the coefficients of x^0..x^N; every operation
 * is closed at that order (products are reduced mod x^{N+1}).  The order is
 * always explicit — there is no global precision knob.
 */
class PowerSeries {
 public:
  explicit PowerSeries(int order);
  PowerSeries(int order, std::vector<Rational> coeffs);

  static PowerSeries one(int order);
  /// The series x.
  static PowerSeries identity(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(PowerSeries a, const Rational& s);

  /// Substitutes `inner` (which must have zero constant term and the same
  /// order) into this series; exact through the shared order.
  PowerSeries compose(const PowerSeries& inner) const;

  /// Multiplicative inverse; requires a nonzero constant term.
  PowerSeries reciprocal() const;

  bool operator==(const PowerSeries& o) const = default;

 private:
  std::vector<Rational> coeffs_;
};

/// log(1+x): coefficients (-1)^{n+1}/n for n >= 1.
PowerSeries log1p_series(int order);

/// Lif_k: coefficient of z^n is 1/(n! (n+1)^k); any integer k.
PowerSeries lif_series(int k, int order);

/// (1+x)^z for rational z, via C(z,n) falling-factorial products.
PowerSeries binomial_series(const Rational& z, int order);

/// f * (1+x)^{sign*z}; sign is +1 or -1.
PowerSeries scale_binomial(const PowerSeries& f, const Rational& z, int sign);

std::ostream& operator<<(std::ostream& os, const PowerSeries& s);

}  // namespace polycauchy
