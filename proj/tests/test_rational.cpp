#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polycauchy/rational.hpp"
#include "test_support.hpp"

using namespace polycauchy;

TEST_CASE("arithmetic basics") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 2) / Rational(3, 4) == Rational(2, 3));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
}

TEST_CASE("canonical form") {
  Rational r(2, 4);
  CHECK(r.num() == 1);
  CHECK(r.den() == 2);

  Rational s(3, -6);
  CHECK(s.num() == -1);
  CHECK(s.den() == 2);

  Rational z(0, 7);
  CHECK(z.num() == 0);
  CHECK(z.den() == 1);

  CHECK(Rational(4, 2).is_integer());
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("pow") {
  CHECK(Rational(1, 2).pow(3) == Rational(1, 8));
  CHECK(Rational(3).pow(-2) == Rational(1, 9));
  CHECK(Rational(-2, 3).pow(2) == Rational(4, 9));
  CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
  CHECK(Rational(5, 7).pow(0) == Rational(1));
  CHECK(Rational(0).pow(0) == Rational(1));
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(7, 2) > Rational(3));
}

TEST_CASE("text rendering") {
  CHECK(Rational(5, 6).str() == "5/6");
  CHECK(Rational(-5, 6).str() == "-5/6");
  CHECK(Rational(5, -6).str() == "-5/6");
  CHECK(Rational(8, 4).str() == "2");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(-3).str() == "-3");
}

TEST_CASE("parse") {
  CHECK(Rational::parse("5/6") == Rational(5, 6));
  CHECK(Rational::parse("-5/6") == Rational(-5, 6));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK(Rational::parse(" 2/4 ") == Rational(1, 2));
  CHECK(Rational::parse("12345678901234567890123").den() == 1);

  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("parse/render round trip") {
  testing::RationalGen gen(17);
  for (int i = 0; i < 200; ++i) {
    Rational r = gen.next();
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("field axioms on random triples") {
  testing::RationalGen gen(99);
  for (int i = 0; i < 300; ++i) {
    Rational a = gen.next(), b = gen.next(), c = gen.next();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Rational(0) == a);
    CHECK(a * Rational(1) == a);
    CHECK(a - a == Rational(0));
    Rational d = gen.next_nonzero();
    CHECK(d * d.inverse() == Rational(1));
    CHECK(a / d * d == a);
  }
}
