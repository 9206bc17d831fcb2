#pragma once

#include "polycauchy/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace polycauchy {

/*
 * Dense polynomial in one variable over Rational.
 * Trailing zero coefficients are stripped; the zero polynomial keeps an
 * empty coefficient list and reports degree -1.
 */
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    strip();
  }

  static RatPolynomial constant(const Rational& c) {
    return RatPolynomial(std::vector<Rational>{c});
  }

  bool is_zero() const { return coeffs_.empty(); }
  long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }

  Rational eval(const Rational& z) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
    return acc;
  }

  RatPolynomial& operator+=(const RatPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    strip();
    return *this;
  }
  RatPolynomial& operator-=(const RatPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    strip();
    return *this;
  }
  RatPolynomial& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    strip();
    return *this;
  }

  friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) { return a += b; }
  friend RatPolynomial operator-(RatPolynomial a, const RatPolynomial& b) { return a -= b; }
  friend RatPolynomial operator*(RatPolynomial a, const Rational& s) { return a *= s; }

  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return RatPolynomial();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RatPolynomial(std::move(out));
  }

  bool operator==(const RatPolynomial& o) const = default;

 private:
  void strip() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RatPolynomial& p);

}  // namespace polycauchy
