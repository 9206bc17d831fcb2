#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polycauchy/binomial.hpp"
#include "polycauchy/stirling.hpp"

using namespace polycauchy;

namespace {

// Closed form for the second kind: (1/m!) sum_i (-1)^i C(m,i) (m-i)^n.
Int stirling2_closed_form(int n, int m) {
  Int sum = 0;
  for (int i = 0; i <= m; ++i) {
    Int term = binomial(m, i) * int_pow(Int(m - i), static_cast<unsigned long long>(n));
    sum += i % 2 == 0 ? term : -term;
  }
  return sum / factorial(m);
}

}  // namespace

TEST_CASE("first kind golden values") {
  CHECK(stirling1(6, 3) == 225);
  CHECK(stirling1(4, 2) == 11);
  CHECK(stirling1(4, 1) == 6);
  CHECK(stirling1(4, 3) == 6);
  for (int n = 0; n <= 12; ++n) CHECK(stirling1(n, n) == 1);
  CHECK(stirling1(0, 0) == 1);
  CHECK(stirling1(5, 0) == 0);
  CHECK(stirling1(3, 7) == 0);
}

TEST_CASE("second kind against the alternating closed form") {
  CHECK(stirling2(3, 2) == 3);
  for (int n = 0; n <= 9; ++n) {
    if (n >= 1) CHECK(stirling2(n, 1) == 1);
    CHECK(stirling2(n, n) == 1);
    for (int m = 1; m <= n; ++m) CHECK(stirling2(n, m) == stirling2_closed_form(n, m));
  }
}

TEST_CASE("r-Stirling golden values and boundaries") {
  CHECK(r_stirling(StirlingKind::first, 6, 4, 2) == 71);
  CHECK(r_stirling(StirlingKind::first, 6, 3, 2) == 154);
  CHECK(r_stirling(StirlingKind::first, 6, 4, 3) == 47);
  CHECK(r_stirling(StirlingKind::first, 6, 5, 3) == 12);
  CHECK(r_stirling(StirlingKind::first, 6, 3, 3) == 60);
  CHECK(r_stirling(StirlingKind::first, 6, 5, 4) == 9);
  CHECK(r_stirling(StirlingKind::first, 6, 4, 4) == 20);
  CHECK(r_stirling(StirlingKind::second, 5, 4, 4) == 4);

  for (int r = 0; r <= 5; ++r)
    for (int m = 0; m <= 6; ++m) {
      CHECK(r_stirling(StirlingKind::first, r, m, r) == (m == r ? 1 : 0));
      CHECK(r_stirling(StirlingKind::second, r, m, r) == (m == r ? 1 : 0));
      if (r > 0) {
        CHECK(r_stirling(StirlingKind::first, r - 1, m, r) == 0);
        CHECK(r_stirling(StirlingKind::second, r - 1, m, r) == 0);
      }
    }
  CHECK_THROWS_AS(r_stirling(StirlingKind::first, 3, 2, -1), std::invalid_argument);
}

TEST_CASE("r = 0 and r = 1 reduce to the classical triangles") {
  for (int n = 0; n <= 12; ++n)
    for (int m = 0; m <= n; ++m) {
      CHECK(r_stirling(StirlingKind::first, n, m, 0) == stirling1(n, m));
      CHECK(r_stirling(StirlingKind::second, n, m, 0) == stirling2(n, m));
      if (n > 0) {
        CHECK(r_stirling(StirlingKind::first, n, m, 1) == stirling1(n, m));
        CHECK(r_stirling(StirlingKind::second, n, m, 1) == stirling2(n, m));
      }
    }
}

TEST_CASE("row sums of the first kind equal n!/r!") {
  for (int n = 1; n <= 20; ++n)
    for (int r = 1; r <= n; ++r) {
      Int sum = 0;
      for (int m = r; m <= n; ++m) sum += r_stirling(StirlingKind::first, n, m, r);
      CHECK(sum == factorial(n) / factorial(r));
    }
}

TEST_CASE("alternating first-kind row sums vanish for r >= 2") {
  for (int r = 2; r <= 12; ++r) {
    Int sum = 0;
    for (int l = 1; l <= r; ++l) {
      Int t = stirling1(r, l);
      sum += l % 2 == 0 ? t : -t;
    }
    CHECK(sum == 0);
  }
}

TEST_CASE("ogf of the first kind") {
  CHECK(ogf_check_first(6, 4));
  CHECK(ogf_check_first(6, 1));
  for (int r = 0; r <= 5; ++r) CHECK(ogf_check_first(r, r));
  for (int n = 0; n <= 10; ++n)
    for (int r = 0; r <= n; ++r) CHECK(ogf_check_first(n, r));
  CHECK_THROWS_AS(ogf_check_first(2, 3), std::invalid_argument);
}

TEST_CASE("ogf of the second kind") {
  CHECK(ogf_check_second(4, 4, 5));
  CHECK(r_stirling(StirlingKind::second, 5, 4, 4) == 4);
  // geometric row: {t,r}_r = r^{t-r}
  for (int r = 1; r <= 4; ++r)
    for (int t = r; t <= 9; ++t)
      CHECK(r_stirling(StirlingKind::second, t, r, r) ==
            int_pow(Int(r), static_cast<unsigned long long>(t - r)));
  for (int m = 0; m <= 6; ++m)
    for (int r = 0; r <= m; ++r) {
      CHECK(ogf_check_second(m, r, 8));
      if (m >= 1) CHECK(ogf_check_second(m, r, m - 1));  // all-zero prefix
    }
}

TEST_CASE("orthogonality") {
  CHECK(orthogonality_check(8, 0).status == CheckStatus::pass);
  CHECK(orthogonality_check(8, 3).status == CheckStatus::pass);
  CHECK(orthogonality_check(3, 3).status == CheckStatus::pass);

  // the r=3, n=5, m=4 inner sum vanishes
  Int sum = 0;
  for (int k = 0; k <= 6; ++k) {
    Int t = r_stirling(StirlingKind::first, 5, k, 3) *
            r_stirling(StirlingKind::second, k, 4, 3);
    sum += (5 - k) % 2 == 0 ? t : -t;
  }
  CHECK(sum == 0);

  IdentityReport rep = orthogonality_check(6, 2);
  CHECK(rep.id == IdentityId::ORTHOGONALITY);
  CHECK(rep.tuples_checked == 7 * 7 * 4);
  CHECK(rep.failures.empty());
}

TEST_CASE("broder symmetric sum") {
  CHECK(broder_symmetric_sum(5, 0, 2) == 1);
  CHECK(broder_symmetric_sum(4, 1, 4) == 4);
  CHECK(broder_symmetric_sum(3, 2, 2) == 19);
  for (int n = 0; n <= 9; ++n)
    for (int r = 0; r <= n; ++r)
      for (int m = 0; m + n <= 14 && m <= 5; ++m)
        CHECK(broder_symmetric_sum(n, m, r) ==
              r_stirling(StirlingKind::second, n + m, n, r));
  CHECK_THROWS_AS(broder_symmetric_sum(2, 1, 3), std::invalid_argument);
}

TEST_CASE("lemma 1 decomposition") {
  CHECK(lemma1_decompose(6, 3, 2) == 225);
  CHECK(lemma1_decompose(6, 3, 3) == 225);
  CHECK(lemma1_decompose(6, 3, 4) == 225);
  for (int n = 1; n <= 12; ++n)
    for (int r = 1; r <= n; ++r) CHECK(lemma1_decompose(n, n, r) == 1);

  for (int n = 1; n <= 12; ++n)
    for (int r = 1; r <= n; ++r)
      for (int m = 1; m <= n; ++m) CHECK(lemma1_decompose(n, m, r) == stirling1(n, m));

  CHECK_THROWS_AS(lemma1_decompose(3, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(lemma1_decompose(3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(lemma1_decompose(3, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(lemma1_decompose(3, 1, 4), std::invalid_argument);
}

TEST_CASE("first-kind rows contract through binomials") {
  // sum_{l=i+1..r} (-1)^{r-l} [r,l] C(l-1,i) == (-1)^{r-i-1} [r-1,i]
  for (int r = 1; r <= 10; ++r)
    for (int i = 0; i <= r - 1; ++i) {
      Int sum = 0;
      for (int l = i + 1; l <= r; ++l) {
        Int t = stirling1(r, l) * binomial(l - 1, i);
        sum += (r - l) % 2 == 0 ? t : -t;
      }
      Int rhs = stirling1(r - 1, i);
      CHECK(sum == ((r - i - 1) % 2 == 0 ? rhs : -rhs));
    }
}

TEST_CASE("triangle table object") {
  TriangleTable t(StirlingKind::first, 2);
  CHECK(t.value(6, 4) == 71);
  CHECK(t.row(6) == std::vector<Int>{120, 154, 71, 14, 1});
  CHECK(t.row(1).empty());
  CHECK(t.value(1, 1) == 0);
}
