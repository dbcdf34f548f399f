#include <doctest.h>

#include <stdexcept>

#include "bvtorus/rational.hpp"

using bvtorus::Rational;

TEST_CASE("rationals are stored reduced with positive denominator") {
  const Rational q(6, -4);
  CHECK(q.numerator_string() == "-3");
  CHECK(q.denominator_string() == "2");
  CHECK(q.to_string() == "-3/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(4, 2).is_integer());
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK(Rational::parse("0/5").is_zero());
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(Rational(-3, 4).inverse() == Rational(-4, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("to_integer only for integral values") {
  CHECK(Rational(-12, 3).to_integer() == -4);
  CHECK_THROWS_AS(Rational(1, 2).to_integer(), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("100000000000000000000000").to_integer(), std::domain_error);
}

TEST_CASE("no overflow on large intermediate values") {
  Rational big(1);
  for (int k = 0; k < 80; ++k) big *= Rational(1'000'000'007);
  for (int k = 0; k < 80; ++k) big /= Rational(1'000'000'007);
  CHECK(big == Rational(1));
}
