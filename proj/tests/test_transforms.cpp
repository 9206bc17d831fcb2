#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polycauchy/binomial.hpp"
#include "polycauchy/sequences.hpp"
#include "polycauchy/stirling.hpp"
#include "polycauchy/transforms.hpp"
#include "test_support.hpp"

using namespace polycauchy;

namespace {

std::vector<Rational> fibonacci(int count) {
  std::vector<Rational> f{Rational(0), Rational(1)};
  while (static_cast<int>(f.size()) < count)
    f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  f.resize(static_cast<std::size_t>(count));
  return f;
}

}  // namespace

TEST_CASE("binomial transform doubles Fibonacci indices") {
  RatSequence a{fibonacci(9), 0};
  RatSequence b = binomial_transform(a, false);
  auto fib = fibonacci(17);
  for (int n = 0; n < 9; ++n)
    CHECK(b.terms[static_cast<std::size_t>(n)] == fib[static_cast<std::size_t>(2 * n)]);
}

TEST_CASE("binomial transform of alternating Fibonacci") {
  auto fib = fibonacci(10);
  RatSequence a{fib, 0};
  for (std::size_t n = 0; n < a.terms.size(); ++n)
    if (n % 2 == 1) a.terms[n] = -a.terms[n];
  RatSequence b = binomial_transform(a, false);
  for (std::size_t n = 0; n < b.terms.size(); ++n) CHECK(b.terms[n] == -fib[n]);
}

TEST_CASE("binomial transform of the delta sequence is all ones") {
  RatSequence a{{Rational(1), Rational(0), Rational(0), Rational(0)}, 0};
  RatSequence b = binomial_transform(a, false);
  for (const Rational& v : b.terms) CHECK(v == Rational(1));
}

TEST_CASE("stirling transform of geometric sequences") {
  // a_n = l^n maps to (n+l-1)!/(l-1)!
  for (int l = 1; l <= 3; ++l) {
    RatSequence a;
    for (int n = 0; n < 8; ++n)
      a.terms.push_back(Rational(int_pow(Int(l), static_cast<unsigned long long>(n))));
    RatSequence b = stirling_transform(a, false);
    for (int n = 0; n < 8; ++n)
      CHECK(b.terms[static_cast<std::size_t>(n)] ==
            Rational(factorial(n + l - 1) / factorial(l - 1)));
  }
}

TEST_CASE("stirling transform of falling factorials") {
  // a_n = n(n-1)...(n-l+1) maps to l! [n+1, l+1]
  for (int l = 0; l <= 3; ++l) {
    RatSequence a;
    for (int n = 0; n < 8; ++n) a.terms.push_back(Rational(falling_factorial(n, l)));
    RatSequence b = stirling_transform(a, false);
    for (int n = 0; n < 8; ++n)
      CHECK(b.terms[static_cast<std::size_t>(n)] ==
            Rational(factorial(l) * stirling1(n + 1, l + 1)));
  }
}

TEST_CASE("round trips") {
  testing::RationalGen gen(7);
  for (int trial = 0; trial < 10; ++trial) {
    RatSequence a{gen.sequence(12), 0};
    CHECK(binomial_transform(binomial_transform(a, false), true) == a);
    CHECK(binomial_transform(binomial_transform(a, true), false) == a);
    CHECK(stirling_transform(stirling_transform(a, false), true) == a);
    CHECK(stirling_transform(stirling_transform(a, true), false) == a);
  }
}

TEST_CASE("r = 0 r-Stirling pair is the classical second-kind pair") {
  testing::RationalGen gen(13);
  RatSequence a{gen.sequence(10), 0};
  RatSequence fwd = r_stirling_transform(a, 0, false);
  RatSequence inv = r_stirling_transform(a, 0, true);
  for (int n = 0; n < 10; ++n) {
    Rational fwd_want(0), inv_want(0);
    for (int k = 0; k <= n; ++k) {
      fwd_want += Rational(stirling2(n, k)) * a.terms[static_cast<std::size_t>(k)];
      Rational w(stirling1(n, k));
      inv_want += ((n - k) % 2 == 0 ? w : -w) * a.terms[static_cast<std::size_t>(k)];
    }
    CHECK(fwd.terms[static_cast<std::size_t>(n)] == fwd_want);
    CHECK(inv.terms[static_cast<std::size_t>(n)] == inv_want);
  }
  // round trip through the classical pair on all indices
  CHECK(r_stirling_transform(fwd, 0, true) == a);
}

TEST_CASE("r = 2 transform of first-kind poly-Cauchy numbers") {
  RatSequence a;
  for (int j = 0; j <= 5; ++j) a.terms.push_back(poly_cauchy_first(j, 1));
  RatSequence b = r_stirling_transform(a, 2, false);
  CHECK(b.terms[5] == Rational(-1, 30));  // -1/5 + 1/6
  CHECK(b.terms[0] == Rational(0));
  CHECK(b.terms[1] == Rational(0));
}

TEST_CASE("r-Stirling round trip is the identity from index r on") {
  testing::RationalGen gen(29);
  for (int r = 0; r <= 4; ++r)
    for (int trial = 0; trial < 5; ++trial) {
      RatSequence a{gen.sequence(12), 0};
      RatSequence fwd_then_inv = r_stirling_transform(r_stirling_transform(a, r, false), r, true);
      RatSequence inv_then_fwd = r_stirling_transform(r_stirling_transform(a, r, true), r, false);
      for (std::size_t n = static_cast<std::size_t>(r); n < a.terms.size(); ++n) {
        CHECK(fwd_then_inv.terms[n] == a.terms[n]);
        CHECK(inv_then_fwd.terms[n] == a.terms[n]);
      }
      for (std::size_t n = 0; n < static_cast<std::size_t>(r); ++n)
        CHECK(fwd_then_inv.terms[n] == Rational(0));
    }
}

TEST_CASE("linearity") {
  testing::RationalGen gen(41);
  RatSequence a{gen.sequence(10), 0};
  RatSequence b{gen.sequence(10), 0};
  Rational alpha = gen.next(), beta = gen.next();
  RatSequence combo;
  for (std::size_t i = 0; i < a.terms.size(); ++i)
    combo.terms.push_back(alpha * a.terms[i] + beta * b.terms[i]);

  auto combine = [&](const RatSequence& x, const RatSequence& y) {
    RatSequence out;
    for (std::size_t i = 0; i < x.terms.size(); ++i)
      out.terms.push_back(alpha * x.terms[i] + beta * y.terms[i]);
    return out;
  };

  for (bool invert : {false, true}) {
    CHECK(binomial_transform(combo, invert) ==
          combine(binomial_transform(a, invert), binomial_transform(b, invert)));
    CHECK(stirling_transform(combo, invert) ==
          combine(stirling_transform(a, invert), stirling_transform(b, invert)));
    CHECK(r_stirling_transform(combo, 3, invert) ==
          combine(r_stirling_transform(a, 3, invert), r_stirling_transform(b, 3, invert)));
  }
}

TEST_CASE("offsets are preserved and low indices read as zero") {
  RatSequence a{{Rational(2), Rational(5)}, 1};  // a_1 = 2, a_2 = 5
  RatSequence b = binomial_transform(a, false);
  CHECK(b.offset == 1);
  CHECK(b.terms[0] == Rational(2));               // C(1,1) a_1
  CHECK(b.terms[1] == Rational(2 * 2 + 5));       // C(2,1) a_1 + C(2,2) a_2
}

TEST_CASE("shifted orthogonality round trip") {
  // the (n+1, k+1)-indexed pair is the identity from index r-1 on
  for (int r = 1; r <= 4; ++r)
    for (int n = r - 1; n <= 10; ++n)
      for (int m = 0; m <= 10; ++m) {
        Int sum = 0;
        for (int k = 0; k <= 11; ++k) {
          Int t = r_stirling(StirlingKind::first, n + 1, k + 1, r) *
                  r_stirling(StirlingKind::second, k + 1, m + 1, r);
          sum += (n - k) % 2 == 0 ? t : -t;
        }
        CHECK(sum == (n == m ? 1 : 0));
      }
}
