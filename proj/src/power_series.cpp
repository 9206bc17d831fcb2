#include "polycauchy/power_series.hpp"

#include "polycauchy/binomial.hpp"

#include <ostream>
#include <stdexcept>

namespace polycauchy {

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

PowerSeries::PowerSeries(int order, std::vector<Rational> coeffs) : PowerSeries(order) {
  if (coeffs.size() > coeffs_.size())
    throw std::invalid_argument("PowerSeries: more coefficients than the order admits");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
}

PowerSeries PowerSeries::one(int order) {
  PowerSeries s(order);
  s.coeffs_[0] = Rational(1);
  return s;
}

PowerSeries PowerSeries::identity(int order) {
  PowerSeries s(order);
  if (order >= 1) s.coeffs_[1] = Rational(1);
  return s;
}

namespace {
void require_same_order(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("PowerSeries: mismatched truncation orders");
}
}  // namespace

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  require_same_order(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  require_same_order(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  PowerSeries out(a.order());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < b.coeffs_.size(); ++j)
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

PowerSeries operator*(PowerSeries a, const Rational& s) {
  for (auto& c : a.coeffs_) c *= s;
  return a;
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
  require_same_order(*this, inner);
  if (!inner.coeffs_[0].is_zero())
    throw std::invalid_argument("PowerSeries::compose: inner series has nonzero constant term");
  // Horner over the truncated ring.
  PowerSeries acc(order());
  acc.coeffs_[0] = coeffs_.back();
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    acc = acc * inner;
    acc.coeffs_[0] += coeffs_[i];
  }
  return acc;
}

PowerSeries PowerSeries::reciprocal() const {
  if (coeffs_[0].is_zero())
    throw std::invalid_argument("PowerSeries::reciprocal: zero constant term");
  PowerSeries out(order());
  Rational inv = coeffs_[0].inverse();
  out.coeffs_[0] = inv;
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    Rational s(0);
    for (std::size_t i = 1; i <= n; ++i) s += coeffs_[i] * out.coeffs_[n - i];
    out.coeffs_[n] = -s * inv;
  }
  return out;
}

PowerSeries log1p_series(int order) {
  PowerSeries s(order);
  for (int n = 1; n <= order; ++n)
    s[static_cast<std::size_t>(n)] = Rational(n % 2 == 1 ? 1 : -1, n);
  return s;
}

PowerSeries lif_series(int k, int order) {
  PowerSeries s(order);
  for (int n = 0; n <= order; ++n) {
    Rational c(Int(1), factorial(n));
    s[static_cast<std::size_t>(n)] = c * Rational(Int(n + 1)).pow(-static_cast<long long>(k));
  }
  return s;
}

PowerSeries binomial_series(const Rational& z, int order) {
  PowerSeries s(order);
  Rational c(1);
  s[0] = c;
  for (int n = 1; n <= order; ++n) {
    c *= (z - Rational(n - 1)) / Rational(n);
    s[static_cast<std::size_t>(n)] = c;
  }
  return s;
}

PowerSeries scale_binomial(const PowerSeries& f, const Rational& z, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("scale_binomial: sign must be +1 or -1");
  return f * binomial_series(sign == 1 ? z : -z, f.order());
}

std::ostream& operator<<(std::ostream& os, const PowerSeries& s) {
  os << "[";
  for (int i = 0; i <= s.order(); ++i) {
    if (i) os << ", ";
    os << s[static_cast<std::size_t>(i)];
  }
  return os << "]";
}

}  // namespace polycauchy
