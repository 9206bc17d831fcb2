#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace polycauchy {

using Int = boost::multiprecision::cpp_int;

/*
 * Exact rational scalar.
 *
 * Invariants: den > 0, gcd(|num|, den) == 1, zero is stored as 0/1.
 * Canonical form is restored after every operation, so equality is
 * field-wise and hashing/ordering never need cross-multiplication
 * beyond comparisons.
 */
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(Int n) : num_(std::move(n)), den_(1) {}
  Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }
  Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  bool operator==(const Rational& o) const = default;

  std::strong_ordering operator<=>(const Rational& o) const {
    Int lhs = num_ * o.den_;
    Int rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Exact a^e; e may be negative only for nonzero a.
  Rational pow(long long e) const;

  Rational inverse() const {
    if (num_ == 0) throw std::domain_error("Rational: inverse of zero");
    return Rational(den_, num_);
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  /// Canonical text: "p/q" in lowest terms, "p" when q == 1, sign on the
  /// numerator. This rendering is shared by every output format.
  std::string str() const;

  /// Parses "p", "p/q", with optional leading sign and surrounding blanks.
  static Rational parse(std::string_view text);

 private:
  void normalize();

  Int num_;
  Int den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace polycauchy
