#pragma once

// Independent reference computations for the test suites. Nothing here calls the
// BV operator, the Gerstenhaber bracket or the sl2 solvers it is used to check.

#include <cstdint>
#include <vector>

#include "bvtorus/linalg.hpp"
#include "bvtorus/polyvector.hpp"

namespace bvtorus::oracle {

/// Dense univariate product of coefficient vectors (index = exponent - offset).
std::vector<std::int64_t> schoolbook_mul(const std::vector<std::int64_t>& p, const std::vector<std::int64_t>& q);

/// [z^n theta_i, z^m theta_j] = z^{n+m} (m_i theta_j - n_j theta_i)
PolyVector degree_one_bracket_closed_form(const MultiIndex& n, int i, const MultiIndex& m, int j);

/// Lie bracket of two degree-1 polyvectors computed as the commutator of the
/// derivations they define on Laurent polynomials: the result's theta_k
/// coefficient is z_k^{-1} [X,Y](z_k).
PolyVector derivation_bracket(const PolyVector& x, const PolyVector& y);

/// Restriction of Z_i D_j to the chart z_k = Z_k / Z_0, computed by applying the
/// derivation to the coordinate functions with the quotient rule.
PolyVector restriction_by_quotient_rule(std::size_t rank, std::size_t i, std::size_t j);

/// Contraction oracle for Delta on a single monomial, written from the formula
/// z^n sum_j (-1)^{j-1} n_{i_j} theta_{S minus i_j} with explicit list surgery.
PolyVector contraction_by_hand(const MultiIndex& n, const std::vector<int>& sorted_wedge);

/// All integer assignments a_k, b_k in [-bound, bound] satisfying the matrix
/// relations [e,f] = h for e x_k = a_k x_{k+1}, f x_k = b_k x_{k-1},
/// h = diag(-n, -n+2, ..., n). Returns the invariants (a_k b_{k+1})_k of each.
std::vector<std::vector<std::int64_t>> brute_force_sl2_products(std::int64_t n, std::int64_t bound);

/// Enumerates all coordinate subspaces (spans of basis subsets) that are invariant
/// under every operator; for operators with simple weight decomposition in the
/// given basis these are all invariant subspaces. Returns their dimensions.
std::vector<std::size_t> invariant_coordinate_subspaces(const std::vector<const RationalMatrix*>& ops);

}  // namespace bvtorus::oracle
