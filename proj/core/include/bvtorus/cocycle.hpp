#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "bvtorus/laurent.hpp"
#include "bvtorus/liealg.hpp"

namespace bvtorus {

/// Chevalley-Eilenberg 1-cochain on W_r with values in Laurent polynomials:
///   x |-> alpha Delta(x) + sum_i beta_i z_i^{-1} [x, z_i] + [x, g].
struct CE1Cochain {
  std::size_t rank = 1;
  Rational alpha;
  /// Either empty (all zero) or of length `rank`.
  std::vector<Rational> betas;
  std::optional<LaurentPoly> exact_part;

  Rational beta(std::size_t i) const { return betas.empty() ? Rational{} : betas.at(i - 1); }

  /// Parses "alpha=-1/2,beta=[-1/2],g=0". Keys may be omitted (default zero);
  /// g uses the polynomial text grammar. Throws std::invalid_argument.
  static CE1Cochain parse(std::string_view text, std::size_t rank);
};

/// Arbitrary cochain, used for cochains outside the symbolic family.
using Cochain = std::function<LaurentPoly(const VectorField&)>;

LaurentPoly evaluate(const CE1Cochain& c, const VectorField& x);

/// The reference action of a vector field on functions, x.f = [x, f].
LaurentPoly act_on_function(const VectorField& x, const LaurentPoly& f);

/// psi([x,y]) - x.psi(y) + y.psi(x); zero iff the cocycle condition holds on (x, y).
LaurentPoly ce_differential(const Cochain& psi, const VectorField& x, const VectorField& y);
LaurentPoly ce_differential_check(const CE1Cochain& c, const VectorField& x, const VectorField& y);

/// All xi_{n,i} with |n|_inf <= window, i = 1..rank.
std::vector<VectorField> witt_basis_window(std::size_t rank, std::int64_t window);

/// True iff the CE differential vanishes on every basis pair of the window.
/// Throws std::invalid_argument when window < 1.
bool is_cocycle_on_window(const Cochain& psi, std::size_t rank, std::int64_t window);
bool is_cocycle_on_window(const CE1Cochain& c, std::int64_t window);

}  // namespace bvtorus
