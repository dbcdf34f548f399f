#include "bvtorus/floermodel.hpp"

#include <stdexcept>

namespace bvtorus {

std::string describe(const ChordGenerator& g, std::int64_t n) {
  switch (g.kind) {
    case ChordKind::kIntersection:
      return "x" + std::to_string(g.grading_index);
    case ChordKind::kProperPlus:
      return "v+," + std::to_string(g.grading_index - n);
    case ChordKind::kProperMinus:
      return "v-," + std::to_string(g.grading_index);
  }
  return "?";
}

std::vector<ChordGenerator> build_chord_basis(std::int64_t n, std::int64_t window) {
  if (n <= 0) throw std::invalid_argument("CW^0(L, L(n)) model requires n > 0");
  if (window < 0) throw std::invalid_argument("chord window must be non-negative");
  std::vector<ChordGenerator> basis;
  for (std::int64_t k = 0; k <= n; ++k) basis.push_back({ChordKind::kIntersection, k});
  for (std::int64_t k = 1; k <= window; ++k) basis.push_back({ChordKind::kProperPlus, n + k});
  for (std::int64_t k = 1; k <= window; ++k) basis.push_back({ChordKind::kProperMinus, -k});
  return basis;
}

std::int64_t relative_grading(const ChordGenerator& a, const ChordGenerator& b) {
  return a.grading_index - b.grading_index;
}

std::vector<std::pair<ChordGenerator, Rational>> xi0_eigenvalues(const std::vector<ChordGenerator>& basis,
                                                                 std::int64_t n) {
  // lambda is fixed by differences up to one additive constant; pin it at v_-.
  const ChordGenerator v_minus{ChordKind::kIntersection, 0};
  const Rational base = Rational(-n, 2);
  std::vector<std::pair<ChordGenerator, Rational>> out;
  for (const auto& g : basis) out.emplace_back(g, base + Rational(relative_grading(g, v_minus)));
  return out;
}

ChordTerm end_action(std::int64_t j, const ChordGenerator& g, std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("end action requires n > 0");
  const bool plus_end = g.kind == ChordKind::kProperPlus || (g.kind == ChordKind::kIntersection && g.grading_index == n);
  const bool minus_end = g.kind == ChordKind::kProperMinus || (g.kind == ChordKind::kIntersection && g.grading_index == 0);
  if (j > 0 && plus_end) {
    const std::int64_t k = g.grading_index - n;
    const std::int64_t target = n + k + j;
    return {Rational(k), {target == n ? ChordKind::kIntersection : ChordKind::kProperPlus, target}};
  }
  if (j < 0 && minus_end) {
    const std::int64_t k = g.grading_index;
    const std::int64_t target = k + j;
    return {Rational(k), {target == 0 ? ChordKind::kIntersection : ChordKind::kProperMinus, target}};
  }
  throw std::domain_error("end action is only determined for j > 0 on v_{+,k}, k >= 0, or j < 0 on v_{-,k}, k <= 0");
}

namespace {

// e x_k = a_k x_{k+1} (k < n), f x_k = b_k x_{k-1} (k > 0); b[0] is unused.
RationalMatrix raising(const std::vector<Rational>& a) {
  const std::size_t d = a.size() + 1;
  RationalMatrix e(d, d);
  for (std::size_t k = 0; k < a.size(); ++k) e(k + 1, k) = a[k];
  return e;
}

RationalMatrix lowering(const std::vector<Rational>& b) {
  const std::size_t d = b.size();
  RationalMatrix f(d, d);
  for (std::size_t k = 1; k < d; ++k) f(k - 1, k) = b[k];
  return f;
}

ForcedActionSolution make_solution(std::int64_t n, const std::vector<Rational>& products, std::vector<Rational> a,
                                   std::vector<Rational> b, const RationalMatrix& h) {
  ForcedActionSolution s;
  s.n = n;
  s.products = products;
  s.e = raising(a);
  s.f = lowering(b);
  s.h = h;
  s.a = std::move(a);
  s.b = std::move(b);
  return s;
}

}  // namespace

ForcedActionResult solve_forced_action(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("forced action requires n > 0");
  const std::size_t d = static_cast<std::size_t>(n) + 1;
  const std::size_t unknowns = static_cast<std::size_t>(n);

  std::vector<Rational> h_diag;
  for (const auto& [g, lambda] : xi0_eigenvalues(build_chord_basis(n, 0), n)) h_diag.push_back(lambda * Rational(2));
  const RationalMatrix h = RationalMatrix::diagonal(h_diag);

  ForcedActionResult result;
  result.n = n;

  // [h,e] = 2e and [h,f] = -2f are linear in a and b; check them on a generic point.
  const RationalMatrix e_generic = raising(std::vector<Rational>(unknowns, 1));
  const RationalMatrix f_generic = lowering(std::vector<Rational>(d, 1));
  if (commutator(h, e_generic) != e_generic.scaled(2) || commutator(h, f_generic) != f_generic.scaled(-2)) {
    return result;
  }

  // [e,f] is bilinear and only depends on p_k = a_k b_{k+1}. Column k of the system is
  // the diagonal of [e,f] with only a_k = b_{k+1} = 1.
  RationalMatrix system(d, unknowns);
  for (std::size_t k = 0; k < unknowns; ++k) {
    std::vector<Rational> a(unknowns), b(d);
    a[k] = 1;
    b[k + 1] = 1;
    const RationalMatrix ef = commutator(raising(a), lowering(b));
    if (!ef.is_diagonal()) return result;
    for (std::size_t row = 0; row < d; ++row) system(row, k) = ef(row, row);
  }
  result.system_rank = system.rank();
  const auto products = system.solve(h_diag);
  result.consistent = products.has_value();
  if (!products || result.system_rank != unknowns) return result;

  // Enumerate orbits of the torus (Q^*)^{n+1} acting by x_k |-> c_k x_k. When p_k != 0
  // both a_k and b_{k+1} are nonzero and can be normalized; when p_k = 0 the orbit is
  // one of (a_k = 0, b_{k+1} != 0), (a_k != 0, b_{k+1} = 0), (both 0).
  std::vector<std::size_t> zero_slots;
  for (std::size_t k = 0; k < unknowns; ++k) {
    if ((*products)[k].is_zero()) zero_slots.push_back(k);
  }
  std::size_t combos = 1;
  for (std::size_t z = 0; z < zero_slots.size(); ++z) combos *= 3;
  for (std::size_t code = 0; code < combos; ++code) {
    std::vector<Rational> a(unknowns), b(d);
    for (std::size_t k = 0; k < unknowns; ++k) {
      const Rational canonical = Rational(n - static_cast<std::int64_t>(k));
      a[k] = canonical;
      b[k + 1] = (*products)[k] / canonical;
    }
    std::size_t c = code;
    for (auto k : zero_slots) {
      const std::size_t choice = c % 3;
      c /= 3;
      a[k] = choice == 1 ? Rational(1) : Rational(0);
      b[k + 1] = choice == 0 ? Rational(1) : Rational(0);
    }
    auto sol = make_solution(n, *products, std::move(a), std::move(b), h);
    if (commutator(sol.e, sol.f) == h) result.orbits.push_back(std::move(sol));
  }
  return result;
}

DensityIdentification identify_with_density_model(std::int64_t n) {
  DensityIdentification id;
  id.n = n;
  const ForcedActionResult forced = solve_forced_action(n);
  if (!forced.unique_up_to_rescaling()) return id;
  const ForcedActionSolution& floer = forced.orbits.front();

  const Rational alpha = Rational(-n, 2);
  const auto density = extract_finite_sl2_submodule({alpha, alpha});
  id.density_module_exists = density.has_value();
  if (!density) return id;
  const std::size_t d = static_cast<std::size_t>(n) + 1;
  id.dimensions_match = density->dim() == d;
  if (!id.dimensions_match) return id;
  id.density_labels = density->basis_labels();

  // Both bases are ordered by increasing weight; match x_k with the k-th density vector.
  id.spectra_match = true;
  for (std::size_t k = 0; k < d; ++k) id.spectra_match = id.spectra_match && floer.h(k, k) == density->h()(k, k);
  if (!id.spectra_match) return id;

  // phi(x_k) = c_k w_k with phi e = e' phi: c_{k+1} a_k = c_k e'_{k+1,k}.
  id.scale.assign(d, Rational(1));
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (floer.e(k + 1, k).is_zero()) return id;
    id.scale[k + 1] = id.scale[k] * density->e()(k + 1, k) / floer.e(k + 1, k);
  }
  const RationalMatrix phi = RationalMatrix::diagonal(id.scale);
  id.intertwines = phi * floer.e == density->e() * phi && phi * floer.f == density->f() * phi &&
                   phi * floer.h == density->h() * phi && phi.rank() == d;
  return id;
}

}  // namespace bvtorus
