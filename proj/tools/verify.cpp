#include "verify.hpp"

#include <stdexcept>

#include "bvtorus/cocycle.hpp"
#include "bvtorus/densityrep.hpp"
#include "bvtorus/floermodel.hpp"
#include "bvtorus/liealg.hpp"
#include "bvtorus/random_elements.hpp"
#include "bvtorus/text_format.hpp"

namespace bvtorus::cli {

bool SuiteReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return !checks.empty();
}

Json SuiteReport::to_json() const {
  Json j;
  j["suite"] = suite;
  j["passed"] = passed();
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json entry{{"identity", c.identity}, {"cases", c.cases}, {"failures", c.failures}, {"passed", c.passed()}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    arr.push_back(std::move(entry));
  }
  j["checks"] = std::move(arr);
  if (!extra.empty()) j["extra"] = extra;
  return j;
}

namespace {

std::vector<std::size_t> ranks_for(const SuiteOptions& opts) {
  if (opts.rank) {
    if (*opts.rank < 1 || *opts.rank > 3) throw std::invalid_argument("rank must be in 1..3");
    return {*opts.rank};
  }
  return {1, 2, 3};
}

void record(CheckResult& c, bool ok, const std::string& witness = {}) {
  ++c.cases;
  if (ok) return;
  ++c.failures;
  if (!witness.empty() && !c.detail.contains("first_failure")) c.detail["first_failure"] = witness;
}

int sign_pow(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

std::string suffix(std::size_t rank) { return " [r=" + std::to_string(rank) + "]"; }

}  // namespace

SuiteReport verify_bv_axioms(const SuiteOptions& opts) {
  SuiteReport report;
  report.suite = "bv-axioms";
  for (const std::size_t r : ranks_for(opts)) {
    ElementSampler::Options sampler_opts;
    sampler_opts.max_exponent = opts.window;
    ElementSampler sampler(opts.seed + r, sampler_opts);
    CheckResult delta_sq{"delta_squared_zero" + suffix(r)};
    CheckResult two_routes{"delta_contraction_equals_divergence" + suffix(r)};
    CheckResult commut{"graded_commutativity" + suffix(r)};
    CheckResult symmetry{"bracket_graded_symmetry" + suffix(r)};
    CheckResult jacobi{"graded_jacobi" + suffix(r)};
    CheckResult poisson{"poisson_derivation" + suffix(r)};
    CheckResult grading{"h1_grading_homogeneity" + suffix(r)};

    for (std::size_t s = 0; s < opts.samples; ++s) {
      const PolyVector mixed = sampler.mixed_polyvector(r);
      record(delta_sq, bv_delta(bv_delta(mixed)).is_zero(), format(mixed));
      record(two_routes, bv_delta(mixed) == bv_delta_divergence(mixed), format(mixed));

      const auto dx = static_cast<std::size_t>(sampler.uniform(0, static_cast<std::int64_t>(r)));
      const auto dy = static_cast<std::size_t>(sampler.uniform(0, static_cast<std::int64_t>(r)));
      const auto dz = static_cast<std::size_t>(sampler.uniform(0, static_cast<std::int64_t>(r)));
      const PolyVector x = sampler.polyvector(r, dx);
      const PolyVector y = sampler.polyvector(r, dy);
      const PolyVector z = sampler.polyvector(r, dz);
      const std::string triple = format(x) + " | " + format(y) + " | " + format(z);

      record(commut, wedge(x, y) == wedge(y, x).scaled(sign_pow(dx * dy)), triple);
      record(symmetry, gerstenhaber_bracket(x, y) == gerstenhaber_bracket(y, x).scaled(sign_pow(dx * dy)), triple);

      const PolyVector jac = gerstenhaber_bracket(gerstenhaber_bracket(x, y), z).scaled(sign_pow(dx * dz)) +
                             gerstenhaber_bracket(gerstenhaber_bracket(y, z), x).scaled(sign_pow(dy * dx)) +
                             gerstenhaber_bracket(gerstenhaber_bracket(z, x), y).scaled(sign_pow(dz * dy));
      record(jacobi, jac.is_zero(), triple);

      const PolyVector lhs = gerstenhaber_bracket(x, wedge(y, z));
      const PolyVector rhs = wedge(gerstenhaber_bracket(x, y), z) +
                             wedge(y, gerstenhaber_bracket(x, z)).scaled(sign_pow((dx + 1) * dy));
      record(poisson, lhs == rhs, triple);

      // Each operation on H_1-homogeneous monomials lands in the summed grading.
      const PolyVector mx = PolyVector::monomial(x.terms().begin()->first.exp, x.terms().begin()->first.wedge.indices());
      const PolyVector my = PolyVector::monomial(y.terms().begin()->first.exp, y.terms().begin()->first.wedge.indices());
      const MultiIndex g = mx.gradings().front() + my.gradings().front();
      bool homogeneous = true;
      for (const PolyVector& out : {wedge(mx, my), gerstenhaber_bracket(mx, my)}) {
        for (const auto& h : out.gradings()) homogeneous = homogeneous && h == g;
      }
      for (const auto& h : bv_delta(mx).gradings()) homogeneous = homogeneous && h == mx.gradings().front();
      record(grading, homogeneous, format(mx) + " | " + format(my));
    }
    for (auto* c : {&delta_sq, &two_routes, &commut, &symmetry, &jacobi, &poisson, &grading}) {
      report.checks.push_back(std::move(*c));
    }
  }
  report.extra = {{"seed", opts.seed}, {"samples", opts.samples}, {"max_exponent", opts.window}};
  return report;
}

SuiteReport verify_embedding(const SuiteOptions& opts) {
  SuiteReport report;
  report.suite = "embedding";
  for (const std::size_t r : ranks_for(opts)) {
    const EmbeddingReport emb = verify_lie_embedding(r);
    CheckResult hom{"restriction_is_lie_homomorphism" + suffix(r)};
    hom.cases = emb.pairs_checked;
    hom.failures = emb.pairs_checked - emb.pairs_ok;
    CheckResult kernel{"kernel_is_scalars" + suffix(r)};
    record(kernel, emb.kernel_is_scalars);
    kernel.detail = {{"image_dim", emb.image_dim}};
    const RootSystemReport roots = root_system(r);
    CheckResult rootset{"nonzero_gradings_form_A_r" + suffix(r)};
    record(rootset, roots.matches_a_r);
    rootset.detail = {{"roots", roots.roots.size()}, {"cartan_dim", roots.cartan_dim}};
    CheckResult cartan{"cartan_abelian" + suffix(r)};
    const auto h = cartan_subalgebra(r);
    for (const auto& a : h) {
      for (const auto& b : h) record(cartan, witt_bracket(a, b).is_zero());
    }
    for (auto* c : {&hom, &kernel, &rootset, &cartan}) report.checks.push_back(std::move(*c));
  }
  CheckResult sl2{"standard_sl2_triple"};
  try {
    (void)standard_sl2(1);
    record(sl2, true);
  } catch (const std::invalid_argument& e) {
    record(sl2, false, e.what());
  }
  report.checks.push_back(std::move(sl2));
  return report;
}

SuiteReport verify_cocycles(const SuiteOptions& opts) {
  SuiteReport report;
  report.suite = "cocycles";
  const std::int64_t window = opts.window;
  const std::vector<std::size_t> ranks = opts.rank ? std::vector<std::size_t>{*opts.rank} : std::vector<std::size_t>{1, 2};
  for (const std::size_t r : ranks) {
    ElementSampler sampler(opts.seed + r);
    CE1Cochain bv;
    bv.rank = r;
    bv.alpha = 1;
    CheckResult bvc{"bv_operator_is_cocycle" + suffix(r)};
    record(bvc, is_cocycle_on_window(bv, window));
    report.checks.push_back(std::move(bvc));

    for (std::size_t i = 1; i <= r; ++i) {
      CE1Cochain lg;
      lg.rank = r;
      lg.betas.assign(r, Rational(0));
      lg.betas[i - 1] = 1;
      CheckResult lc{"log_cocycle_z" + std::to_string(i) + suffix(r)};
      record(lc, is_cocycle_on_window(lg, window));
      report.checks.push_back(std::move(lc));
    }

    CE1Cochain combo;
    combo.rank = r;
    combo.alpha = sampler.rational();
    for (std::size_t i = 0; i < r; ++i) combo.betas.push_back(sampler.rational());
    combo.exact_part = sampler.laurent(r);
    CheckResult cc{"random_combination_with_coboundary" + suffix(r)};
    record(cc, is_cocycle_on_window(combo, window));
    report.checks.push_back(std::move(cc));

    // xi_{n,i} |-> n_i^2 z^n is not a cocycle.
    const Cochain bad = [](const VectorField& x) {
      LaurentPoly out(x.rank());
      for (const auto& [key, c] : x.value().terms()) {
        const std::int64_t ni = key.exp.coord(static_cast<std::size_t>(key.wedge.indices().front()));
        out.add_term(key.exp, c * Rational(ni * ni));
      }
      return out;
    };
    CheckResult nc{"engineered_non_cocycle_rejected" + suffix(r)};
    record(nc, !is_cocycle_on_window(bad, r, window));
    report.checks.push_back(std::move(nc));
  }
  report.extra = {{"window", window}, {"seed", opts.seed}};
  return report;
}

SuiteReport verify_rep_classification(const SuiteOptions& opts) {
  SuiteReport report;
  report.suite = "rep-classification";
  CheckResult existence{"existence_iff_alpha_nonpositive_half_integer_and_alpha_plus_beta_integral"};
  CheckResult dimension{"dimension_is_1_minus_2alpha"};
  CheckResult spectrum{"h_spectrum_symmetric_step_2"};
  CheckResult irreducible{"irreducible_weight_chain"};
  CheckResult oracle{"irreducible_closure_oracle"};
  CheckResult kernels{"kernel_locations"};
  CheckResult lie{"lie_action"};
  Json table = Json::array();
  for (std::int64_t two_alpha = -opts.grid; two_alpha <= 2; ++two_alpha) {
    for (std::int64_t two_beta = -opts.grid; two_beta <= opts.grid; ++two_beta) {
      const DensityRepSpec spec{Rational(two_alpha, 2), Rational(two_beta, 2)};
      const bool expected = two_alpha <= 0 && (spec.alpha + spec.beta).is_integer();
      const auto m = extract_finite_sl2_submodule(spec);
      const std::string label = spec.alpha.to_string() + "," + spec.beta.to_string();
      record(existence, m.has_value() == expected, label);
      record(lie, verify_lie_action(spec, WeightWindow(-8, 8), 3), label);
      Json row{{"alpha", spec.alpha.to_string()}, {"beta", spec.beta.to_string()}, {"exists", m.has_value()}};
      if (m) {
        const std::int64_t n = -two_alpha;
        row["dim"] = m->dim();
        record(dimension, m->dim() == static_cast<std::size_t>(n + 1), label);
        std::vector<std::int64_t> want;
        for (std::int64_t w = -n; w <= n; w += 2) want.push_back(w);
        record(spectrum, m->h_spectrum() == want, label);
        record(irreducible, check_irreducible(*m), label);
        if (m->dim() <= 5) record(oracle, irreducible_by_closure(*m), label);
        // rho(xi_1) kills exactly the weight -alpha vector, rho(xi_{-1}) the weight alpha vector.
        const auto& labels = m->basis_labels();
        bool ok = weight_of(spec, labels.back()) == -spec.alpha && weight_of(spec, labels.front()) == spec.alpha;
        for (std::int64_t j = labels.front() - 2; j <= labels.back() + 2; ++j) {
          const LaurentPoly v = LaurentPoly::monomial(MultiIndex{j});
          ok = ok && rho_apply(spec, 1, v).is_zero() == (j == labels.back());
          ok = ok && rho_apply(spec, -1, v).is_zero() == (j == labels.front());
        }
        record(kernels, ok, label);
      }
      table.push_back(std::move(row));
    }
  }
  for (auto* c : {&existence, &dimension, &spectrum, &irreducible, &oracle, &kernels, &lie}) {
    report.checks.push_back(std::move(*c));
  }
  report.extra = {{"grid", opts.grid}, {"table", std::move(table)}};
  return report;
}

SuiteReport verify_floer(const SuiteOptions& opts) {
  SuiteReport report;
  report.suite = "floer";
  CheckResult unique{"unique_rescaling_orbit"};
  CheckResult dim{"dimension_n_plus_1"};
  CheckResult casimir{"casimir_scalar_n(n+2)/2"};
  CheckResult stable{"V(n)_stable_and_weight_spaces_one_dimensional"};
  CheckResult density{"matches_density_model"};
  Json rows = Json::array();
  for (std::int64_t n = 1; n <= opts.max_n; ++n) {
    const std::string label = "n=" + std::to_string(n);
    const ForcedActionResult res = solve_forced_action(n);
    record(unique, res.unique_up_to_rescaling(), label);
    Json row{{"n", n}, {"orbits", res.orbits.size()}};
    if (res.unique_up_to_rescaling()) {
      const auto& sol = res.orbits.front();
      const std::size_t d = sol.e.rows();
      record(dim, d == static_cast<std::size_t>(n + 1), label);
      const Rational c(n * (n + 2), 2);
      const RationalMatrix cas = sol.e * sol.f + sol.f * sol.e + (sol.h * sol.h).scaled(Rational(1, 2));
      record(casimir, cas == RationalMatrix::identity(d).scaled(c), label);
      bool ok = true;
      for (std::size_t k = 0; k < d; ++k) {
        ok = ok && sol.e(k, d - 1).is_zero() && sol.f(k, 0).is_zero();
        for (std::size_t l = k + 1; l < d; ++l) ok = ok && sol.h(k, k) != sol.h(l, l);
      }
      record(stable, ok, label);
      row["casimir"] = c.to_string();
    }
    const DensityIdentification id = identify_with_density_model(n);
    record(density, id.ok(), label);
    row["matches_density_model"] = id.ok();
    rows.push_back(std::move(row));
  }
  for (auto* c : {&unique, &dim, &casimir, &stable, &density}) report.checks.push_back(std::move(*c));
  report.extra = {{"max_n", opts.max_n}, {"per_n", std::move(rows)}};
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"bv-axioms", "embedding", "cocycles", "rep-classification", "floer"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "bv-axioms") return verify_bv_axioms(opts);
  if (name == "embedding") return verify_embedding(opts);
  if (name == "cocycles") return verify_cocycles(opts);
  if (name == "rep-classification") return verify_rep_classification(opts);
  if (name == "floer") return verify_floer(opts);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace bvtorus::cli
