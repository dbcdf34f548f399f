#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "bvtorus/laurent.hpp"
#include "bvtorus/polyvector.hpp"

namespace bvtorus {

/// Seeded generator for property suites. Draws are derived directly from the
/// mt19937_64 stream so the same seed gives the same elements on every platform.
class ElementSampler {
 public:
  struct Options {
    std::int64_t max_exponent = 2;
    std::size_t max_terms = 3;
    std::int64_t max_numerator = 4;
    std::int64_t max_denominator = 3;
  };

  explicit ElementSampler(std::uint64_t seed) : rng_(seed) {}
  ElementSampler(std::uint64_t seed, Options options) : rng_(seed), options_(options) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  Rational rational();
  Rational nonzero_rational();
  MultiIndex multi_index(std::size_t rank);

  LaurentPoly laurent(std::size_t rank);
  /// Nonzero monomial c z^n.
  LaurentPoly laurent_monomial(std::size_t rank);
  /// Homogeneous polyvector of cohomological degree `degree` (may be zero if cancellation occurs).
  PolyVector polyvector(std::size_t rank, std::size_t degree);
  /// Polyvector whose terms have random degrees.
  PolyVector mixed_polyvector(std::size_t rank);

 private:
  std::mt19937_64 rng_;
  Options options_;
};

}  // namespace bvtorus
