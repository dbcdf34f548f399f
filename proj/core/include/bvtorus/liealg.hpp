#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bvtorus/linalg.hpp"
#include "bvtorus/polyvector.hpp"

namespace bvtorus {

/// Degree-1 polyvector field: an element of the Witt algebra W_r = Vect(G_m^r).
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(std::size_t rank) : value_(rank) {}
  /// Throws std::invalid_argument unless `value` is zero or purely of degree 1.
  explicit VectorField(PolyVector value);

  /// xi_{n,i} = z^n theta_i
  static VectorField xi(const MultiIndex& n, int i);
  /// Rank-1 shorthand xi_n = z^n theta = z^{n+1} d/dz.
  static VectorField xi(std::int64_t n);

  const PolyVector& value() const { return value_; }
  std::size_t rank() const { return value_.rank(); }
  bool is_zero() const { return value_.is_zero(); }

  VectorField scaled(const Rational& c) const { return VectorField(value_.scaled(c)); }
  friend VectorField operator+(const VectorField& a, const VectorField& b) { return VectorField(a.value_ + b.value_); }
  friend VectorField operator-(const VectorField& a, const VectorField& b) { return VectorField(a.value_ - b.value_); }
  friend bool operator==(const VectorField&, const VectorField&) = default;

 private:
  PolyVector value_;
};

/// Lie bracket of vector fields, computed through the Gerstenhaber bracket.
VectorField witt_bracket(const VectorField& x, const VectorField& y);

/// (e, h, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h; checked on construction.
class Sl2Triple {
 public:
  /// Throws std::invalid_argument if the sl_2 relations fail.
  Sl2Triple(VectorField e, VectorField h, VectorField f);

  const VectorField& e() const { return e_; }
  const VectorField& h() const { return h_; }
  const VectorField& f() const { return f_; }

 private:
  VectorField e_, h_, f_;
};

/// (xi_1, 2 xi_0, -xi_{-1}) in W_1. Throws std::invalid_argument if rank != 1.
Sl2Triple standard_sl2(std::size_t rank = 1);

/// (r+1) x (r+1) rational matrix read as the linear vector field sum E_ij Z_i D_j on A^{r+1}.
class GlMatrix {
 public:
  explicit GlMatrix(std::size_t size) : m_(size, size) {}
  explicit GlMatrix(RationalMatrix m);

  /// Elementary matrix E_ij, 0-based indices in 0..size-1.
  static GlMatrix elementary(std::size_t size, std::size_t i, std::size_t j);
  static GlMatrix identity(std::size_t size) { return GlMatrix(RationalMatrix::identity(size)); }

  std::size_t size() const { return m_.rows(); }
  const RationalMatrix& matrix() const { return m_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  Rational trace() const { return m_.trace(); }

  friend GlMatrix operator+(const GlMatrix& a, const GlMatrix& b) { return GlMatrix(a.m_ + b.m_); }
  friend GlMatrix operator-(const GlMatrix& a, const GlMatrix& b) { return GlMatrix(a.m_ - b.m_); }
  friend bool operator==(const GlMatrix&, const GlMatrix&) = default;

 private:
  RationalMatrix m_;
};

GlMatrix matrix_commutator(const GlMatrix& a, const GlMatrix& b);

/// Restriction of linear vector fields on A^{r+1} to the open torus of P^r in the
/// affine chart z_i = Z_i / Z_0, written in the theta basis (d_j = z_j^{-1} theta_j).
/// `rank` is r; throws std::invalid_argument if E is not (r+1) x (r+1).
VectorField restrict_from_projective(const GlMatrix& e, std::size_t rank);

struct EmbeddingPairFailure {
  std::size_t i, j, k, l;
};

struct EmbeddingReport {
  std::size_t rank = 0;
  std::size_t pairs_checked = 0;
  std::size_t pairs_ok = 0;
  std::vector<EmbeddingPairFailure> failures;
  /// Dimension of the image of gl_{r+1}; r(r+2) when the kernel is the scalars.
  std::size_t image_dim = 0;
  bool identity_maps_to_zero = false;
  bool kernel_is_scalars = false;

  bool homomorphism_ok() const { return failures.empty() && pairs_ok == pairs_checked; }
  bool ok() const { return homomorphism_ok() && kernel_is_scalars; }
};

/// Checks restrict([E_ij, E_kl]) == [restrict(E_ij), restrict(E_kl)] on all gl_{r+1}
/// basis pairs and computes the rank of the image. Requires 1 <= r <= 3.
EmbeddingReport verify_lie_embedding(std::size_t rank);

/// Root lattice vector, stored both in Z^{r+1} (e_0..e_r) and H_1 coordinates Z^r,
/// related by z_i <-> e_i - e_0.
class RootVector {
 public:
  static RootVector from_h1(const MultiIndex& n);
  /// Throws std::invalid_argument if the coordinates do not sum to zero.
  static RootVector from_ambient(std::vector<std::int64_t> coords);
  /// e_a - e_b in Z^{r+1}.
  static RootVector difference(std::size_t rank, std::size_t a, std::size_t b);

  const std::vector<std::int64_t>& ambient() const { return ambient_; }
  const MultiIndex& h1() const { return h1_; }
  bool is_zero() const { return h1_.is_zero(); }

  friend RootVector operator+(const RootVector& a, const RootVector& b) { return from_h1(a.h1_ + b.h1_); }
  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector& a, const RootVector& b) { return a.ambient_ <=> b.ambient_; }

 private:
  std::vector<std::int64_t> ambient_;
  MultiIndex h1_;
};

/// H_1 grading of a grading-homogeneous vector field as a root vector; nullopt for zero.
/// Throws std::invalid_argument if x mixes several gradings.
std::optional<RootVector> root_grading(const VectorField& x);

/// [theta_1, ..., theta_r]
std::vector<VectorField> cartan_subalgebra(std::size_t rank);

struct RootEntry {
  RootVector root;
  std::size_t row, col;  // originating E_{row,col}
  VectorField field;
};

struct RootSystemReport {
  std::size_t rank = 0;
  std::vector<RootEntry> roots;  // sorted by ambient coordinates
  std::size_t cartan_dim = 0;
  bool matches_a_r = false;
  bool homomorphism_ok = false;
};

/// Sweeps the sl_{r+1} image, collects nonzero gradings and the grading-zero dimension,
/// and compares against {e_a - e_b : a != b}. Requires 1 <= r <= 3.
RootSystemReport root_system(std::size_t rank);

/// Dimension of the Q-span of a family of polyvectors.
std::size_t span_dimension(const std::vector<PolyVector>& family);

}  // namespace bvtorus
