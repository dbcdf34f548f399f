#include "bvtorus/random_elements.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace bvtorus {

std::int64_t ElementSampler::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty sampling range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng_() % span);
}

Rational ElementSampler::rational() {
  return Rational(uniform(-options_.max_numerator, options_.max_numerator), uniform(1, options_.max_denominator));
}

Rational ElementSampler::nonzero_rational() {
  Rational q;
  while (q.is_zero()) q = rational();
  return q;
}

MultiIndex ElementSampler::multi_index(std::size_t rank) {
  std::vector<std::int64_t> v(rank);
  for (auto& e : v) e = uniform(-options_.max_exponent, options_.max_exponent);
  return MultiIndex(std::move(v));
}

LaurentPoly ElementSampler::laurent(std::size_t rank) {
  LaurentPoly p(rank);
  const auto terms = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(options_.max_terms)));
  for (std::size_t t = 0; t < terms; ++t) p.add_term(multi_index(rank), rational());
  return p;
}

LaurentPoly ElementSampler::laurent_monomial(std::size_t rank) {
  return LaurentPoly::monomial(multi_index(rank), nonzero_rational());
}

PolyVector ElementSampler::polyvector(std::size_t rank, std::size_t degree) {
  if (degree > rank) throw std::invalid_argument("degree exceeds rank");
  PolyVector p(rank);
  const auto terms = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(options_.max_terms)));
  for (std::size_t t = 0; t < terms; ++t) {
    // Random k-subset of 1..rank by partial Fisher-Yates.
    std::vector<int> pool(rank);
    for (std::size_t i = 0; i < rank; ++i) pool[i] = static_cast<int>(i + 1);
    for (std::size_t i = 0; i < degree; ++i) {
      const auto j = static_cast<std::size_t>(uniform(static_cast<std::int64_t>(i), static_cast<std::int64_t>(rank) - 1));
      std::swap(pool[i], pool[j]);
    }
    std::vector<int> subset(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(degree));
    std::sort(subset.begin(), subset.end());
    p.add_term(multi_index(rank), WedgeMonomial::sorted(std::move(subset)), nonzero_rational());
  }
  return p;
}

PolyVector ElementSampler::mixed_polyvector(std::size_t rank) {
  PolyVector p(rank);
  const auto parts = uniform(1, 3);
  for (std::int64_t t = 0; t < parts; ++t) {
    p = p + polyvector(rank, static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(rank))));
  }
  return p;
}

}  // namespace bvtorus
