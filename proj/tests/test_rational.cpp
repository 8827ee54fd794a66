#include <doctest.h>

#include "reservekit/rational.hpp"
#include "reservekit/error.hpp"

using reservekit::Rational;

TEST_CASE("rational normalizes and parses decimals exactly") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational::parse("0.9") == Rational(9, 10));
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK(Rational::parse("-1.25") == Rational(-5, 4));
  CHECK(Rational(9, 10).to_string() == "9/10");
  CHECK(Rational(4, 2).to_string() == "2");
}

TEST_CASE("rational arithmetic and ordering") {
  CHECK(Rational(9, 10) + Rational(1, 10) == Rational(1));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(7, 7) == Rational(1));
}

TEST_CASE("rational rejects garbage and zero denominators") {
  CHECK_THROWS_AS(Rational(1, 0), reservekit::Error);
  CHECK_THROWS_AS(Rational::parse("abc"), reservekit::Error);
  CHECK_THROWS_AS(Rational::parse("1/"), reservekit::Error);
  CHECK_THROWS_AS(Rational::parse("1."), reservekit::Error);
}
