#include "polycauchy/transforms.hpp"

#include "polycauchy/binomial.hpp"
#include "polycauchy/stirling.hpp"

#include <stdexcept>

namespace polycauchy {

namespace {

// Weight callback receives absolute indices (n, k).
template <typename Weight>
RatSequence map_prefix(const RatSequence& a, Weight&& w) {
  RatSequence out;
  out.offset = a.offset;
  out.terms.reserve(a.terms.size());
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    long long n = static_cast<long long>(a.offset + i);
    Rational sum(0);
    for (long long k = static_cast<long long>(a.offset); k <= n; ++k) {
      const Rational& ak = a.terms[static_cast<std::size_t>(k - a.offset)];
      if (ak.is_zero()) continue;
      sum += w(n, k) * ak;
    }
    out.terms.push_back(std::move(sum));
  }
  return out;
}

Rational signed_weight(long long n, long long k, Int magnitude) {
  return Rational((n - k) % 2 == 0 ? magnitude : Int(-magnitude));
}

}  // namespace

RatSequence binomial_transform(const RatSequence& a, bool invert) {
  if (!invert)
    return map_prefix(a, [](long long n, long long k) { return Rational(binomial(n, k)); });
  return map_prefix(
      a, [](long long n, long long k) { return signed_weight(n, k, binomial(n, k)); });
}

RatSequence stirling_transform(const RatSequence& a, bool invert) {
  if (!invert)
    return map_prefix(a, [](long long n, long long k) {
      return Rational(stirling1(static_cast<int>(n), static_cast<int>(k)));
    });
  return map_prefix(a, [](long long n, long long k) {
    return signed_weight(n, k, stirling2(static_cast<int>(n), static_cast<int>(k)));
  });
}

RatSequence r_stirling_transform(const RatSequence& a, int r, bool invert) {
  if (r < 0) throw std::invalid_argument("r_stirling_transform: negative r");
  if (!invert)
    return map_prefix(a, [r](long long n, long long k) {
      return Rational(
          r_stirling(StirlingKind::second, static_cast<int>(n), static_cast<int>(k), r));
    });
  return map_prefix(a, [r](long long n, long long k) {
    return signed_weight(
        n, k, r_stirling(StirlingKind::first, static_cast<int>(n), static_cast<int>(k), r));
  });
}

}  // namespace polycauchy
