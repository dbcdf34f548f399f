#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bvtorus/laurent.hpp"
#include "bvtorus/linalg.hpp"
#include "bvtorus/liealg.hpp"

namespace bvtorus {

/// The Witt-algebra module V_{alpha,beta} of densities P(z) z^beta (dz/z)^alpha on G_m,
/// realized on Laurent polynomials by rho(xi_i) z^j = (j + alpha i + beta) z^{i+j}.
struct DensityRepSpec {
  Rational alpha;
  Rational beta;
};

/// Monomials z^j with lo <= j <= hi.
class WeightWindow {
 public:
  /// Throws std::invalid_argument if lo > hi.
  WeightWindow(std::int64_t lo, std::int64_t hi);
  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }

 private:
  std::int64_t lo_, hi_;
};

/// rho(xi_i) applied to a rank-1 Laurent polynomial.
LaurentPoly rho_apply(const DensityRepSpec& spec, std::int64_t i, const LaurentPoly& p);
/// rho(x) for an arbitrary rank-1 vector field x = sum c_i xi_i.
LaurentPoly rho_apply(const DensityRepSpec& spec, const VectorField& x, const LaurentPoly& p);

/// rho([xi_n, xi_m]) == [rho(xi_n), rho(xi_m)] on every z^j in the window, |n|,|m| <= max_index.
/// The bracket on the left is the Witt bracket; everything is evaluated exactly per monomial.
bool verify_lie_action(const DensityRepSpec& spec, const WeightWindow& window, std::int64_t max_index);

/// xi_0-eigenvalue of z^j, namely j + beta.
Rational weight_of(const DensityRepSpec& spec, std::int64_t j);

/// Finite-dimensional sl_2 module given by matrices acting on column vectors
/// (column k is the image of basis vector k).
class FiniteSl2Module {
 public:
  /// Throws std::invalid_argument unless [h,e] = 2e, [h,f] = -2f, [e,f] = h, h is
  /// diagonal with integer entries whose distinct values are symmetric about 0 and step by 2.
  FiniteSl2Module(std::vector<std::int64_t> basis_labels, RationalMatrix e, RationalMatrix h, RationalMatrix f);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::int64_t>& basis_labels() const { return labels_; }
  const RationalMatrix& e() const { return e_; }
  const RationalMatrix& h() const { return h_; }
  const RationalMatrix& f() const { return f_; }
  std::vector<std::int64_t> h_spectrum() const;
  /// ef + fe + h^2/2
  RationalMatrix casimir() const;

 private:
  std::vector<std::int64_t> labels_;
  RationalMatrix e_, h_, f_;
};

/// The finite-dimensional sl_2-submodule of V_{alpha,beta} for e = rho(xi_1),
/// h = 2 rho(xi_0), f = -rho(xi_{-1}), or nullopt when none exists. The basis is
/// the monomials from the kernel of rho(xi_{-1}) up to the kernel of rho(xi_1).
std::optional<FiniteSl2Module> extract_finite_sl2_submodule(const DensityRepSpec& spec);

/// Irreducibility via weight-space chains: every weight space one-dimensional and
/// e, f nonzero between consecutive weights.
bool check_irreducible(const FiniteSl2Module& m);

/// Brute-force oracle: closes span{v} under e, h, f for every nonzero v with entries
/// in {-1, 0, 1} and reports whether all closures are the whole space. Exact whenever
/// h has simple spectrum (every invariant subspace then contains a basis vector).
/// Throws std::invalid_argument for dim > 6.
bool irreducible_by_closure(const FiniteSl2Module& m);

/// Checks that z^j |-> z^{j+m} intertwines rho_{alpha,beta+m} with rho_{alpha,beta} on
/// the window for |i| <= max_index. Throws std::invalid_argument if m is not an integer.
bool shift_isomorphism_check(const Rational& alpha, const Rational& beta, const Rational& m,
                             const WeightWindow& window, std::int64_t max_index = 3);

}  // namespace bvtorus
