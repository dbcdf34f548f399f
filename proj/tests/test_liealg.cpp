#include <doctest.h>

#include <set>
#include <stdexcept>

#include "bvtorus/liealg.hpp"
#include "bvtorus/random_elements.hpp"
#include "oracles.hpp"

using namespace bvtorus;

TEST_CASE("vector fields must have degree one") {
  CHECK_THROWS_AS(VectorField(PolyVector::monomial(MultiIndex{1}, {})), std::invalid_argument);
  CHECK_THROWS_AS(VectorField(PolyVector::monomial(MultiIndex{0, 0}, {1, 2})), std::invalid_argument);
  CHECK_NOTHROW(VectorField(PolyVector(2)));
}

TEST_CASE("witt bracket examples") {
  CHECK(witt_bracket(VectorField::xi(1), VectorField::xi(-1)) == VectorField::xi(0).scaled(-2));
  const VectorField x = VectorField::xi(MultiIndex{1, 2}, 1) + VectorField::xi(MultiIndex{0, -1}, 2);
  CHECK(witt_bracket(x, x).is_zero());
  CHECK(witt_bracket(VectorField::xi(MultiIndex{1, 0}, 2), VectorField::xi(MultiIndex{0, 1}, 1)) ==
        VectorField::xi(MultiIndex{1, 1}, 1) - VectorField::xi(MultiIndex{1, 1}, 2));
}

TEST_CASE("witt bracket is closed, antisymmetric and satisfies Jacobi") {
  ElementSampler s(9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + static_cast<std::size_t>(trial % 3);
    const VectorField x(s.polyvector(r, 1)), y(s.polyvector(r, 1)), z(s.polyvector(r, 1));
    const VectorField xy = witt_bracket(x, y);
    CHECK(xy == witt_bracket(y, x).scaled(-1));
    CHECK((witt_bracket(xy, z) + witt_bracket(witt_bracket(y, z), x) + witt_bracket(witt_bracket(z, x), y)).is_zero());
    CHECK(xy.value() == oracle::derivation_bracket(x.value(), y.value()));
  }
}

TEST_CASE("standard sl2 triple") {
  const Sl2Triple t = standard_sl2();
  CHECK(witt_bracket(t.h(), t.e()) == t.e().scaled(2));
  CHECK(witt_bracket(t.h(), t.f()) == t.f().scaled(-2));
  CHECK(witt_bracket(t.e(), t.f()) == t.h());
  CHECK(t.e() == VectorField::xi(1));
  CHECK_THROWS_AS(standard_sl2(2), std::invalid_argument);
  CHECK_THROWS_AS(Sl2Triple(VectorField::xi(1), VectorField::xi(0), VectorField::xi(-1)), std::invalid_argument);
}

TEST_CASE("restriction table") {
  // Z_1 D_0 on P^1 is -z theta; e = xi_1 is its negative.
  CHECK(restrict_from_projective(GlMatrix::elementary(2, 1, 0), 1) == VectorField::xi(1).scaled(-1));
  CHECK(restrict_from_projective(GlMatrix::elementary(2, 0, 1), 1) == VectorField::xi(-1));
  CHECK(restrict_from_projective(GlMatrix::identity(4), 3).is_zero());
  CHECK_THROWS_AS(restrict_from_projective(GlMatrix::identity(3), 1), std::invalid_argument);

  for (std::size_t r = 1; r <= 3; ++r) {
    for (std::size_t i = 0; i <= r; ++i) {
      for (std::size_t j = 0; j <= r; ++j) {
        CHECK(restrict_from_projective(GlMatrix::elementary(r + 1, i, j), r).value() ==
              oracle::restriction_by_quotient_rule(r, i, j));
      }
    }
  }
}

TEST_CASE("sl_{r+1} embeds into the Witt algebra") {
  const std::size_t expected_pairs[] = {0, 16, 81, 256};
  for (std::size_t r = 1; r <= 3; ++r) {
    const EmbeddingReport rep = verify_lie_embedding(r);
    CHECK(rep.pairs_checked == expected_pairs[r]);
    CHECK(rep.homomorphism_ok());
    CHECK(rep.image_dim == r * (r + 2));
    CHECK(rep.identity_maps_to_zero);
    CHECK(rep.kernel_is_scalars);
  }
  CHECK_THROWS_AS(verify_lie_embedding(0), std::invalid_argument);
  CHECK_THROWS_AS(verify_lie_embedding(4), std::invalid_argument);
}

TEST_CASE("root gradings") {
  const auto g = root_grading(restrict_from_projective(GlMatrix::elementary(3, 1, 2), 2));
  REQUIRE(g.has_value());
  CHECK(g->h1() == MultiIndex{1, -1});
  CHECK(g->ambient() == std::vector<std::int64_t>{0, 1, -1});
  CHECK(*g == RootVector::difference(2, 1, 2));

  for (const auto& t : cartan_subalgebra(3)) {
    const auto z = root_grading(t);
    REQUIRE(z.has_value());
    CHECK(z->is_zero());
  }
  CHECK_FALSE(root_grading(VectorField(PolyVector(2))).has_value());
  CHECK_THROWS_AS(root_grading(VectorField::xi(1) + VectorField::xi(0)), std::invalid_argument);
  CHECK_THROWS_AS(RootVector::from_ambient({1, 1, 0}), std::invalid_argument);
  CHECK(RootVector::from_ambient({-1, 1, 0}).h1() == MultiIndex{1, 0});
}

TEST_CASE("root system is A_r") {
  for (std::size_t r = 1; r <= 3; ++r) {
    const RootSystemReport rep = root_system(r);
    CHECK(rep.homomorphism_ok);
    CHECK(rep.matches_a_r);
    CHECK(rep.cartan_dim == r);
    CHECK(rep.roots.size() == r * (r + 1));

    // Independently generated {e_a - e_b}.
    std::set<std::vector<std::int64_t>> expected, got;
    for (std::size_t a = 0; a <= r; ++a) {
      for (std::size_t b = 0; b <= r; ++b) {
        if (a == b) continue;
        std::vector<std::int64_t> v(r + 1, 0);
        v[a] = 1;
        v[b] = -1;
        expected.insert(v);
      }
    }
    for (const auto& e : rep.roots) got.insert(e.root.ambient());
    CHECK(got == expected);
  }
}

TEST_CASE("gradings add under the bracket") {
  for (std::size_t r = 1; r <= 3; ++r) {
    const RootSystemReport rep = root_system(r);
    for (const auto& x : rep.roots) {
      for (const auto& y : rep.roots) {
        const VectorField br = witt_bracket(x.field, y.field);
        if (br.is_zero()) continue;
        const auto g = root_grading(br);
        REQUIRE(g.has_value());
        CHECK(*g == x.root + y.root);
      }
    }
  }
}

TEST_CASE("cartan subalgebra is abelian") {
  for (std::size_t r = 1; r <= 3; ++r) {
    const auto h = cartan_subalgebra(r);
    CHECK(h.size() == r);
    for (const auto& a : h) {
      for (const auto& b : h) CHECK(witt_bracket(a, b).is_zero());
    }
    std::vector<PolyVector> vals;
    for (const auto& a : h) vals.push_back(a.value());
    CHECK(span_dimension(vals) == r);
  }
}
