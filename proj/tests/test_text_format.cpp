#include <doctest.h>

#include "bvtorus/random_elements.hpp"
#include "bvtorus/text_format.hpp"
#include "json_format.hpp"

using namespace bvtorus;

TEST_CASE("parsing the text grammar") {
  CHECK(parse_polyvector("z^(1,-2)*t1^t2", 2) == PolyVector::monomial({1, -2}, {1, 2}));
  CHECK(parse_polyvector("t2 ∧ t1", 2) == PolyVector::monomial({0, 0}, {1, 2}, -1));
  CHECK(parse_polyvector("θ1∧θ2", 2) == PolyVector::monomial({0, 0}, {1, 2}));
  CHECK(parse_polyvector("z^3*t", 1) == PolyVector::xi(MultiIndex{3}, 1));
  CHECK(parse_polyvector("z", 1) == PolyVector::monomial(MultiIndex{1}, {}));
  CHECK(parse_polyvector("-3/2*z1^2*z2", 2) == PolyVector::monomial({2, 1}, {}, Rational(-3, 2)));
  CHECK(parse_polyvector("z1 - z1", 1).is_zero());
  CHECK(parse_polyvector("t1*t1", 1).is_zero());
  CHECK(parse_polyvector("0", 3).is_zero());
  CHECK(parse_polyvector(" 2 * z^-1 * t + 1 ", 1) ==
        PolyVector::xi(MultiIndex{-1}, 1).scaled(2) + PolyVector::monomial(MultiIndex{0}, {}));
  CHECK(parse_laurent("z1*z2^-1 + 4", 2) == LaurentPoly::monomial({1, -1}) + LaurentPoly::constant(2, 4));
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_polyvector("z^(1,0", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(parse_polyvector("z^(1)", 2), ParseError);
  CHECK_THROWS_AS(parse_polyvector("t3", 2), ParseError);
  CHECK_THROWS_AS(parse_polyvector("z", 2), ParseError);
  CHECK_THROWS_AS(parse_polyvector("2**z", 1), ParseError);
  CHECK_THROWS_AS(parse_polyvector("1/0", 1), ParseError);
  CHECK_THROWS_AS(parse_polyvector("", 1), ParseError);
  CHECK_THROWS_AS(parse_polyvector("q", 1), ParseError);
  CHECK_THROWS_AS(parse_laurent("z*t", 1), ParseError);
}

TEST_CASE("canonical rendering") {
  CHECK(format(PolyVector(2)) == "0");
  CHECK(format(PolyVector::xi(MultiIndex{0}, 1).scaled(-2)) == "-2*t1");
  const PolyVector p = PolyVector::monomial({1, -2}, {1, 2}, Rational(3, 2));
  CHECK(format(p) == "3/2*z1^1*z2^-2*t1^t2");
  CHECK(format(p, Notation::kPretty) == "3/2*z1^1*z2^-2*θ1∧θ2");
  CHECK(format(LaurentPoly::constant(1, 1)) == "1");
  CHECK(format(LaurentPoly::monomial(MultiIndex{1}) - LaurentPoly::constant(1, 1)) == "-1 + z1^1");
}

TEST_CASE("print/parse round trip") {
  for (std::size_t r = 1; r <= 3; ++r) {
    ElementSampler s(600 + r);
    for (int trial = 0; trial < 50; ++trial) {
      const PolyVector p = s.mixed_polyvector(r);
      CHECK(parse_polyvector(format(p), r) == p);
      CHECK(parse_polyvector(format(p, Notation::kPretty), r) == p);
      CHECK(cli::polyvector_from_json(cli::to_json(p), r) == p);
      const LaurentPoly q = s.laurent(r);
      CHECK(parse_laurent(format(q), r) == q);
      CHECK(cli::laurent_from_json(cli::to_json(q), r) == q);
    }
  }
}

TEST_CASE("json rejects malformed input") {
  CHECK_THROWS_AS(cli::polyvector_from_json(cli::Json::parse(R"([{"coeff":"1","exp":[1]}])"), 2), std::invalid_argument);
  CHECK_THROWS_AS(cli::polyvector_from_json(cli::Json::parse(R"({"coeff":"1"})"), 1), std::invalid_argument);
  CHECK_THROWS_AS(cli::laurent_from_json(cli::Json::parse(R"([{"coeff":"x","exp":[1]}])"), 1), std::invalid_argument);
}
