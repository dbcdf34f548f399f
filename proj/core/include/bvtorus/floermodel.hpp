#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bvtorus/densityrep.hpp"
#include "bvtorus/linalg.hpp"
#include "bvtorus/rational.hpp"

namespace bvtorus {

enum class ChordKind { kIntersection, kProperPlus, kProperMinus };

/// Generator of CW^0(L, L(n)) on the cylinder, labelled by its position in the
/// relative Z-grading with basepoint v_- at index 0. Intersection generators sit at
/// 0..n (v_- = x_0, v_+ = x_n); v_{+,k} sits at n+k and v_{-,k} at k.
struct ChordGenerator {
  ChordKind kind;
  std::int64_t grading_index;

  friend bool operator==(const ChordGenerator&, const ChordGenerator&) = default;
  friend auto operator<=>(const ChordGenerator&, const ChordGenerator&) = default;
};

std::string describe(const ChordGenerator& g, std::int64_t n);

/// n+1 intersection generators followed by `window` proper chords at each end.
/// Throws std::invalid_argument for n <= 0 or window < 0.
std::vector<ChordGenerator> build_chord_basis(std::int64_t n, std::int64_t window);

/// Grading difference between two generators; independent of the basepoint.
std::int64_t relative_grading(const ChordGenerator& a, const ChordGenerator& b);

/// xi_0-eigenvalues lambda with lambda(x) - lambda(y) equal to the grading difference,
/// normalized so that lambda(v_-) = -n/2 and h = 2 xi_0 has spectrum -n..n on V(n).
std::vector<std::pair<ChordGenerator, Rational>> xi0_eigenvalues(const std::vector<ChordGenerator>& basis,
                                                                 std::int64_t n);

struct ChordTerm {
  Rational coeff;
  ChordGenerator generator;
};

/// Action of xi_j on end generators: xi_j(v_{+,k}) = k v_{+,k+j} for j > 0, k >= 0 and
/// xi_j(v_{-,k}) = k v_{-,k+j} for j < 0, k <= 0. Other combinations throw std::domain_error.
ChordTerm end_action(std::int64_t j, const ChordGenerator& g, std::int64_t n);

/// One rescaling orbit of sl_2 actions on V(n) = span(x_0..x_n) with
/// e x_k = a_k x_{k+1}, f x_k = b_k x_{k-1}, h = diag(2 lambda).
struct ForcedActionSolution {
  std::int64_t n = 0;
  /// Orbit invariants a_k b_{k+1}, k = 0..n-1.
  std::vector<Rational> products;
  /// Canonical representative: a_k = n - k, b_{k+1} = products[k] / a_k.
  std::vector<Rational> a;
  std::vector<Rational> b;  // b[0] = 0 is the boundary condition f(x_0) = 0
  RationalMatrix e, h, f;
};

struct ForcedActionResult {
  std::int64_t n = 0;
  /// Rank of the linear system in the orbit invariants.
  std::size_t system_rank = 0;
  bool consistent = false;
  std::vector<ForcedActionSolution> orbits;

  bool unique_up_to_rescaling() const { return consistent && orbits.size() == 1; }
};

/// Solves [h,e] = 2e, [h,f] = -2f, [e,f] = h with e(x_n) = 0, f(x_0) = 0 and h from the
/// xi_0-eigenvalues, returning the solution set modulo x_k |-> c_k x_k.
ForcedActionResult solve_forced_action(std::int64_t n);

struct DensityIdentification {
  std::int64_t n = 0;
  bool density_module_exists = false;
  bool dimensions_match = false;
  bool spectra_match = false;
  bool intertwines = false;
  /// phi(x_k) = scale[k] z^{label_k}
  std::vector<Rational> scale;
  std::vector<std::int64_t> density_labels;

  bool ok() const { return density_module_exists && dimensions_match && spectra_match && intertwines; }
};

/// Weight-matching isomorphism between V(n) and the density submodule at alpha = beta = -n/2.
DensityIdentification identify_with_density_model(std::int64_t n);

}  // namespace bvtorus
