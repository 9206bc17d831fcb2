#pragma once

#include "polycauchy/rational.hpp"

#include <cstddef>
#include <vector>

namespace polycauchy {

/// Finite prefix of a sequence; terms[i] holds the value at index offset + i.
/// Indices below the offset are treated as zero by the transforms.
struct RatSequence {
  std::vector<Rational> terms;
  std::size_t offset = 0;

  bool operator==(const RatSequence&) const = default;
};

/// b_n = sum_k C(n,k) a_k; the inverse applies the alternating-sign form.
RatSequence binomial_transform(const RatSequence& a, bool invert);

/// Forward: b_n = sum_k [n,k] a_k.  Inverse: a_n = sum_k (-1)^{n-k} {n,k} b_k.
RatSequence stirling_transform(const RatSequence& a, bool invert);

/// Forward: b_n = sum_k {n,k}_r a_k.  Inverse: a_n = sum_k (-1)^{n-k} [n,k]_r b_k.
/// The round trip is the identity on indices n >= r only; below r both
/// triangles vanish and the returned entries are the literal (zero) sums.
RatSequence r_stirling_transform(const RatSequence& a, int r, bool invert);

}  // namespace polycauchy
