#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polycauchy/binomial.hpp"
#include "polycauchy/polynomial.hpp"
#include "polycauchy/power_series.hpp"
#include "test_support.hpp"

using namespace polycauchy;

namespace {

PowerSeries random_series(testing::RationalGen& gen, int order, bool zero_constant) {
  PowerSeries s(order);
  for (int i = zero_constant ? 1 : 0; i <= order; ++i)
    s[static_cast<std::size_t>(i)] = gen.next();
  return s;
}

// Substitution oracle: treat f as a plain polynomial, substitute g, truncate.
PowerSeries substitute_as_polynomial(const PowerSeries& f, const PowerSeries& g) {
  RatPolynomial gp(g.coeffs());
  RatPolynomial acc;
  RatPolynomial power = RatPolynomial::constant(Rational(1));
  for (int i = 0; i <= f.order(); ++i) {
    acc += power * f[static_cast<std::size_t>(i)];
    power = power * gp;
  }
  PowerSeries out(f.order());
  for (int i = 0; i <= f.order(); ++i)
    out[static_cast<std::size_t>(i)] = acc.coeff(static_cast<std::size_t>(i));
  return out;
}

}  // namespace

TEST_CASE("log1p coefficients") {
  PowerSeries s = log1p_series(3);
  CHECK(s.coeffs() == std::vector<Rational>{Rational(0), Rational(1), Rational(-1, 2),
                                            Rational(1, 3)});
  CHECK(log1p_series(0).coeffs() == std::vector<Rational>{Rational(0)});
  CHECK(log1p_series(4)[4] == Rational(-1, 4));
}

TEST_CASE("lif coefficients") {
  CHECK(lif_series(1, 2).coeffs() ==
        std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 6)});
  CHECK(lif_series(-1, 2).coeffs() ==
        std::vector<Rational>{Rational(1), Rational(2), Rational(3, 2)});

  PowerSeries exp = lif_series(0, 10);
  for (int n = 0; n <= 10; ++n)
    CHECK(exp[static_cast<std::size_t>(n)] == Rational(Int(1), factorial(n)));
}

TEST_CASE("compose golden value") {
  PowerSeries comp = lif_series(1, 2).compose(log1p_series(2));
  CHECK(comp.coeffs() ==
        std::vector<Rational>{Rational(1), Rational(1, 2), Rational(-1, 12)});
}

TEST_CASE("compose with the identity") {
  testing::RationalGen gen(5);
  PowerSeries f = random_series(gen, 8, false);
  CHECK(f.compose(PowerSeries::identity(8)) == f);
}

TEST_CASE("compose preconditions") {
  PowerSeries f(3), g(3);
  g[0] = Rational(1);
  CHECK_THROWS_AS(f.compose(g), std::invalid_argument);
  CHECK_THROWS_AS(f.compose(PowerSeries(2)), std::invalid_argument);
}

TEST_CASE("compose matches polynomial substitution") {
  testing::RationalGen gen(23);
  for (int order = 0; order <= 12; order += 3) {
    PowerSeries f = random_series(gen, order, false);
    PowerSeries g = random_series(gen, order, true);
    CHECK(f.compose(g) == substitute_as_polynomial(f, g));
  }
}

TEST_CASE("scale_binomial basics") {
  PowerSeries one = PowerSeries::one(2);
  CHECK(scale_binomial(one, Rational(2), 1).coeffs() ==
        std::vector<Rational>{Rational(1), Rational(2), Rational(1)});
  testing::RationalGen gen(7);
  PowerSeries f = random_series(gen, 6, false);
  CHECK(scale_binomial(f, Rational(0), 1) == f);
  CHECK(scale_binomial(f, Rational(0), -1) == f);

  PowerSeries comp = lif_series(1, 1).compose(log1p_series(1));
  CHECK(scale_binomial(comp, Rational(1), 1)[1] == Rational(3, 2));
}

TEST_CASE("scale_binomial with integer z equals repeated (1+x) products") {
  testing::RationalGen gen(31);
  PowerSeries f = random_series(gen, 7, false);
  PowerSeries one_plus_x(7);
  one_plus_x[0] = Rational(1);
  one_plus_x[1] = Rational(1);
  PowerSeries expect = f;
  for (int z = 0; z <= 5; ++z) {
    CHECK(scale_binomial(f, Rational(z), 1) == expect);
    expect = expect * one_plus_x;
  }
}

TEST_CASE("scale_binomial sign -1 divides") {
  testing::RationalGen gen(41);
  PowerSeries f = random_series(gen, 6, false);
  Rational z(5, 3);
  PowerSeries round = scale_binomial(scale_binomial(f, z, 1), z, -1);
  CHECK(round == f);
}

TEST_CASE("reciprocal") {
  testing::RationalGen gen(53);
  PowerSeries f = random_series(gen, 9, false);
  f[0] = gen.next_nonzero();
  CHECK(f * f.reciprocal() == PowerSeries::one(9));
  CHECK_THROWS_AS(PowerSeries(4).reciprocal(), std::invalid_argument);
}

TEST_CASE("arithmetic order discipline") {
  PowerSeries a(3), b(4);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(PowerSeries(-1), std::invalid_argument);
}
