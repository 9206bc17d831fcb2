#include "polycauchy/rational.hpp"

#include <cctype>
#include <ostream>

namespace polycauchy {

void Rational::normalize() {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::pow(long long e) const {
  if (e == 0) return Rational(1);
  if (num_ == 0) {
    if (e < 0) throw std::domain_error("Rational: zero raised to a negative power");
    return Rational(0);
  }
  bool invert = e < 0;
  unsigned long long ue = invert ? static_cast<unsigned long long>(-e)
                                 : static_cast<unsigned long long>(e);
  Rational r;
  r.num_ = boost::multiprecision::pow(num_, static_cast<unsigned>(ue));
  r.den_ = boost::multiprecision::pow(den_, static_cast<unsigned>(ue));
  return invert ? r.inverse() : r;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::parse(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view s = text.substr(b, e - b);
  if (s.empty()) throw std::invalid_argument("Rational: empty token");

  auto read_int = [](std::string_view v) -> Int {
    std::size_t i = 0;
    bool neg = false;
    if (i < v.size() && (v[i] == '+' || v[i] == '-')) {
      neg = v[i] == '-';
      ++i;
    }
    if (i == v.size())
      throw std::invalid_argument("Rational: missing digits in '" + std::string(v) + "'");
    Int value = 0;
    for (; i < v.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(v[i])))
        throw std::invalid_argument("Rational: bad character in '" + std::string(v) + "'");
      value = value * 10 + (v[i] - '0');
    }
    return neg ? Int(-value) : value;
  };

  std::size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(read_int(s));
  Int num = read_int(s.substr(0, slash));
  Int den = read_int(s.substr(slash + 1));
  if (den == 0)
    throw std::invalid_argument("Rational: zero denominator in '" + std::string(s) + "'");
  return Rational(std::move(num), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace polycauchy
