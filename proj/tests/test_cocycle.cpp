#include <doctest.h>

#include <stdexcept>

#include "bvtorus/cocycle.hpp"
#include "bvtorus/random_elements.hpp"

using namespace bvtorus;

namespace {

LaurentPoly z(std::int64_t n, const Rational& c = 1) { return LaurentPoly::monomial(MultiIndex{n}, c); }

CE1Cochain symbolic(const Rational& alpha, std::vector<Rational> betas, std::optional<LaurentPoly> g = std::nullopt) {
  CE1Cochain c;
  c.rank = betas.empty() ? 1 : betas.size();
  c.alpha = alpha;
  c.betas = std::move(betas);
  c.exact_part = std::move(g);
  return c;
}

// xi_n |-> n^2 z^n, linearly extended.
LaurentPoly n_squared(const VectorField& x) {
  LaurentPoly out(1);
  for (const auto& [key, c] : x.value().terms()) {
    const std::int64_t n = key.exp[0];
    out.add_term(key.exp, c * Rational(n * n));
  }
  return out;
}

}  // namespace

TEST_CASE("evaluate examples") {
  for (std::int64_t n = -3; n <= 3; ++n) {
    CHECK(evaluate(symbolic(1, {0}), VectorField::xi(n)) == z(n, n));
    CHECK(evaluate(symbolic(0, {1}), VectorField::xi(n)) == z(n));
  }
  CHECK(evaluate(symbolic(0, {0}, z(1)), VectorField::xi(0)) == z(1));
}

TEST_CASE("spec string parsing") {
  const CE1Cochain c = CE1Cochain::parse("alpha=-1/2,beta=[-1/2],g=0", 1);
  CHECK(c.alpha == Rational(-1, 2));
  CHECK(c.beta(1) == Rational(-1, 2));
  const CE1Cochain d = CE1Cochain::parse("beta=[1,2],g=z1^2", 2);
  CHECK(d.alpha.is_zero());
  CHECK(d.beta(2) == Rational(2));
  REQUIRE(d.exact_part.has_value());
  CHECK(*d.exact_part == LaurentPoly::monomial(MultiIndex{2, 0}));
  CHECK_THROWS_AS(CE1Cochain::parse("beta=[1]", 2), std::invalid_argument);
  CHECK_THROWS_AS(CE1Cochain::parse("gamma=1", 1), std::invalid_argument);
  CHECK_THROWS_AS(CE1Cochain::parse("alpha=x", 1), std::invalid_argument);
}

TEST_CASE("geometric cocycles vanish under the CE differential") {
  for (std::int64_t n = -3; n <= 3; ++n) {
    for (std::int64_t m = -3; m <= 3; ++m) {
      const VectorField x = VectorField::xi(n), y = VectorField::xi(m);
      CHECK(ce_differential_check(symbolic(1, {0}), x, y).is_zero());
      CHECK(ce_differential_check(symbolic(0, {1}), x, y).is_zero());
      CHECK(ce_differential_check(symbolic(0, {0}, z(2) + z(-1, 3)), x, y).is_zero());
    }
  }
  CHECK(is_cocycle_on_window(symbolic(Rational(3, 7), {Rational(-5, 2)}), 4));
  CHECK(is_cocycle_on_window(symbolic(1, {Rational(1, 2), -2}), 2));
  CHECK(is_cocycle_on_window(CE1Cochain{}, 1));
  CHECK_THROWS_AS(is_cocycle_on_window(CE1Cochain{}, 0), std::invalid_argument);
}

TEST_CASE("the n^2 cochain is not a cocycle") {
  const LaurentPoly d = ce_differential(n_squared, VectorField::xi(1), VectorField::xi(-1));
  CHECK(d == z(0, 2));
  CHECK_FALSE(is_cocycle_on_window(n_squared, 1, 2));
}

TEST_CASE("cocycle space is linear and contains coboundaries") {
  ElementSampler s(31);
  for (int trial = 0; trial < 5; ++trial) {
    const CE1Cochain c = symbolic(s.rational(), {s.rational(), s.rational()}, s.laurent(2));
    CHECK(is_cocycle_on_window(c, 1));
  }
}

TEST_CASE("inverse rule for the log cocycle") {
  ElementSampler s(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + static_cast<std::size_t>(trial % 3);
    const VectorField x(s.polyvector(r, 1));
    const LaurentPoly f = s.laurent_monomial(r);
    const LaurentPoly finv = invert_monomial(f);
    CHECK(act_on_function(x, finv) == (finv * finv * act_on_function(x, f)).scaled(-1));
  }
}

TEST_CASE("Delta is a cocycle in bracket form") {
  ElementSampler s(6);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + static_cast<std::size_t>(trial % 3);
    const PolyVector x = s.polyvector(r, 1), y = s.polyvector(r, 1);
    CHECK(bv_delta(gerstenhaber_bracket(x, y)) ==
          gerstenhaber_bracket(x, bv_delta(y)) - gerstenhaber_bracket(y, bv_delta(x)));
  }
}

TEST_CASE("witt basis window") {
  CHECK(witt_basis_window(1, 2).size() == 5);
  CHECK(witt_basis_window(2, 1).size() == 18);
}
