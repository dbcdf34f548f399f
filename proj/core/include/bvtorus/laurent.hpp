#pragma once

#include <cstddef>
#include <map>
#include <set>

#include "bvtorus/multi_index.hpp"
#include "bvtorus/rational.hpp"

namespace bvtorus {

/// Sparse Laurent polynomial in z_1..z_r over Q. Terms are kept in
/// lexicographic exponent order and zero coefficients are never stored.
class LaurentPoly {
 public:
  using TermMap = std::map<MultiIndex, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t rank) : rank_(rank) {}

  static LaurentPoly monomial(const MultiIndex& exp, const Rational& coeff = 1);
  static LaurentPoly constant(std::size_t rank, const Rational& c);

  std::size_t rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Coefficient of z^exp (zero when absent).
  Rational coeff(const MultiIndex& exp) const;
  std::set<MultiIndex> support() const;

  /// Adds c z^exp in place, dropping the term if it cancels.
  void add_term(const MultiIndex& exp, const Rational& c);

  LaurentPoly scaled(const Rational& c) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::size_t rank_ = 0;
  TermMap terms_;
};

/// Throws std::invalid_argument on rank mismatch.
LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

/// Inverse of a single nonzero term c z^n, namely c^{-1} z^{-n}.
/// Throws std::domain_error for anything that is not a monomial.
LaurentPoly invert_monomial(const LaurentPoly& p);

inline LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) { return add(p, q); }
inline LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return sub(p, q); }
inline LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) { return mul(p, q); }

}  // namespace bvtorus
