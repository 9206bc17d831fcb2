#include "polycauchy/polynomial.hpp"

#include <ostream>

namespace polycauchy {

std::ostream& operator<<(std::ostream& os, const RatPolynomial& p) {
  if (p.is_zero()) return os << "0";
  bool printed = false;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const Rational& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    if (printed) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    Rational a = c.abs();
    bool unit = a == Rational(1) && i > 0;
    if (!unit) os << a;
    if (i > 0) {
      if (!unit) os << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    printed = true;
  }
  return os;
}

}  // namespace polycauchy
