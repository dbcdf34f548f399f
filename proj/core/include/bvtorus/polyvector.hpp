#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bvtorus/laurent.hpp"
#include "bvtorus/multi_index.hpp"
#include "bvtorus/rational.hpp"

namespace bvtorus {

/// theta_{i_1} ^ ... ^ theta_{i_k} with 1 <= i_1 < ... < i_k. Ordered by degree, then lexicographically.
class WedgeMonomial {
 public:
  WedgeMonomial() = default;

  /// Canonicalizes an arbitrary index sequence. Returns the Koszul sign of the
  /// sorting permutation, or sign 0 (and an empty monomial) if an index repeats.
  static std::pair<int, WedgeMonomial> from_sequence(std::vector<int> indices);
  /// Requires strictly increasing indices; throws std::invalid_argument otherwise.
  static WedgeMonomial sorted(std::vector<int> indices);

  std::size_t degree() const { return indices_.size(); }
  const std::vector<int>& indices() const { return indices_; }
  bool contains(int i) const;
  /// Removes the entry at position `pos` (0-based).
  WedgeMonomial without_position(std::size_t pos) const;

  friend bool operator==(const WedgeMonomial&, const WedgeMonomial&) = default;
  friend std::strong_ordering operator<=>(const WedgeMonomial& a, const WedgeMonomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.indices_ <=> b.indices_;
  }

 private:
  std::vector<int> indices_;
};

/// Product of two wedge monomials: (sign, S u T); sign is 0 when S and T overlap.
std::pair<int, WedgeMonomial> wedge_monomials(const WedgeMonomial& s, const WedgeMonomial& t);

struct PolyTermKey {
  MultiIndex exp;
  WedgeMonomial wedge;

  friend bool operator==(const PolyTermKey&, const PolyTermKey&) = default;
  friend auto operator<=>(const PolyTermKey&, const PolyTermKey&) = default;
};

/// Element of Q[z_1^{+-1},...,z_r^{+-1}] (x) Lambda(theta_1,...,theta_r), the
/// polyvector fields on the rank-r torus. Cohomological degree is the wedge length.
class PolyVector {
 public:
  using TermMap = std::map<PolyTermKey, Rational>;

  PolyVector() = default;
  explicit PolyVector(std::size_t rank) : rank_(rank) {}

  /// c z^exp theta_S; `wedge` may be unsorted, the Koszul sign is absorbed.
  static PolyVector monomial(const MultiIndex& exp, std::vector<int> wedge, const Rational& c = 1);
  static PolyVector from_laurent(const LaurentPoly& p);
  /// theta_i (1-based).
  static PolyVector theta(std::size_t rank, int i);
  /// xi_{n,i} = z^n theta_i
  static PolyVector xi(const MultiIndex& n, int i);

  std::size_t rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const MultiIndex& exp, const WedgeMonomial& wedge) const;
  void add_term(const MultiIndex& exp, const WedgeMonomial& wedge, const Rational& c);

  /// Degree if every term has the same wedge length; nullopt for zero or mixed elements.
  std::optional<std::size_t> degree() const;
  bool is_homogeneous() const;
  /// Largest degree present, or 0 for the zero element.
  std::size_t max_degree() const;
  PolyVector homogeneous_part(std::size_t k) const;
  /// Degree-0 component as a Laurent polynomial.
  LaurentPoly function_part() const;
  /// Distinct H_1 gradings occurring in the support.
  std::vector<MultiIndex> gradings() const;

  PolyVector scaled(const Rational& c) const;

  friend bool operator==(const PolyVector&, const PolyVector&) = default;

 private:
  std::size_t rank_ = 0;
  TermMap terms_;
};

PolyVector add(const PolyVector& a, const PolyVector& b);
PolyVector sub(const PolyVector& a, const PolyVector& b);
inline PolyVector operator+(const PolyVector& a, const PolyVector& b) { return add(a, b); }
inline PolyVector operator-(const PolyVector& a, const PolyVector& b) { return sub(a, b); }

/// Graded-commutative product a ^ b. Throws std::invalid_argument on rank mismatch.
PolyVector wedge(const PolyVector& a, const PolyVector& b);

/// BV operator by contraction: Delta(z^n eta) = z^n (iota_n eta).
PolyVector bv_delta(const PolyVector& a);

/// BV operator computed as (-1)^{k+1} iota_Omega^{-1} d iota_Omega on degree-k
/// parts, with Omega = prod dz_i / z_i, through an explicit differential-form
/// representation. Independent of bv_delta; the two must agree.
PolyVector bv_delta_divergence(const PolyVector& a);

/// [a,b] = Delta(a b) - Delta(a) b - (-1)^{|a|} a Delta(b), extended bilinearly
/// over homogeneous components.
PolyVector gerstenhaber_bracket(const PolyVector& a, const PolyVector& b);

}  // namespace bvtorus
