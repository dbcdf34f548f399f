#include "cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bvtorus/cocycle.hpp"
#include "bvtorus/densityrep.hpp"
#include "bvtorus/floermodel.hpp"
#include "bvtorus/liealg.hpp"
#include "bvtorus/text_format.hpp"
#include "json_format.hpp"
#include "verify.hpp"

namespace bvtorus::cli {

namespace {

struct GlobalFlags {
  std::size_t rank = 1;
  bool rank_given = false;
  bool json = false;
  bool pretty = false;
  std::uint64_t seed = 1;
};

Json envelope(const std::string& command, const std::vector<std::string>& args, std::size_t rank, Json result) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["args"] = args;
  j["rank"] = rank;
  j["exact"] = true;
  j["result"] = std::move(result);
  return j;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Notation notation(const GlobalFlags& g) { return g.pretty ? Notation::kPretty : Notation::kMachine; }

Json element_result(const PolyVector& p) {
  return Json{{"text", format(p)}, {"pretty", format(p, Notation::kPretty)}, {"terms", to_json(p)}};
}

// CLI11 reads "-3/2" as an option name; accept it by rewriting "--alpha -3/2" to "--alpha=-3/2".
std::vector<std::string> join_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < args.size(); ++k) {
    const bool value_next = k + 1 < args.size() && args[k].starts_with("--") && args[k].find('=') == std::string::npos &&
                            args[k + 1].size() > 1 && args[k + 1][0] == '-' &&
                            (std::isdigit(static_cast<unsigned char>(args[k + 1][1])) != 0);
    if (value_next) {
      out.push_back(args[k] + "=" + args[k + 1]);
      ++k;
    } else {
      out.push_back(args[k]);
    }
  }
  return out;
}

std::string ascii_root_diagram(const RootSystemReport& report) {
  std::ostringstream os;
  if (report.rank == 1) {
    // H_1 coordinate axis from -1 to 1.
    os << "  *---h---*\n  -1  0  +1\n";
    return os.str();
  }
  if (report.rank != 2) return {};
  std::map<std::pair<std::int64_t, std::int64_t>, char> cells;
  for (const auto& r : report.roots) cells[{r.root.h1()[0], r.root.h1()[1]}] = '*';
  cells[{0, 0}] = 'h';
  for (std::int64_t y = 1; y >= -1; --y) {
    os << (y >= 0 ? " " : "") << y << " |";
    for (std::int64_t x = -1; x <= 1; ++x) {
      const auto it = cells.find({x, y});
      os << ' ' << (it == cells.end() ? '.' : it->second);
    }
    os << '\n';
  }
  os << "    +------\n     -1 0 1   (n1 across, n2 up)\n";
  return os.str();
}

Json root_report_json(const RootSystemReport& report) {
  Json roots = Json::array();
  Json origins = Json::array();
  for (const auto& r : report.roots) {
    roots.push_back(r.root.ambient());
    origins.push_back({{"root", r.root.ambient()},
                       {"h1", std::vector<std::int64_t>(r.root.h1().exponents().begin(), r.root.h1().exponents().end())},
                       {"matrix", "E" + std::to_string(r.row) + std::to_string(r.col)},
                       {"field", format(r.field.value())}});
  }
  return Json{{"rank", report.rank},
              {"roots", std::move(roots)},
              {"cartan_dim", report.cartan_dim},
              {"homomorphism_ok", report.homomorphism_ok},
              {"is_A_r", report.matches_a_r},
              {"origins", std::move(origins)}};
}

Json module_json(const FiniteSl2Module& m) {
  return Json{{"exists", true},
              {"dim", m.dim()},
              {"h_spectrum", m.h_spectrum()},
              {"basis", m.basis_labels()},
              {"e", to_json(m.e())},
              {"h", to_json(m.h())},
              {"f", to_json(m.f())},
              {"irreducible", check_irreducible(m)}};
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact BV-algebra, Witt-algebra and sl2 computations on the algebraic torus", "bvtorus"};
  app.fallthrough();
  app.require_subcommand(1);
  GlobalFlags g;
  app.add_option("--rank", g.rank, "Torus rank r")->check(CLI::PositiveNumber)->each([&g](const std::string&) {
    g.rank_given = true;
  });
  app.add_flag("--json", g.json, "Emit a versioned JSON envelope");
  app.add_flag("--pretty", g.pretty, "Render theta as θ and wedges as ∧");
  app.add_option("--seed", g.seed, "Seed for randomized suites")->capture_default_str();

  std::string expr_a, expr_b;
  auto* bracket = app.add_subcommand("bracket", "Gerstenhaber bracket [A, B]");
  bracket->add_option("a", expr_a)->required();
  bracket->add_option("b", expr_b)->required();

  std::string wa, wb;
  auto* wedge_cmd = app.add_subcommand("wedge", "Graded product A ^ B");
  wedge_cmd->add_option("a", wa)->required();
  wedge_cmd->add_option("b", wb)->required();

  std::string bv_expr;
  bool divergence = false;
  auto* bv = app.add_subcommand("bv", "BV operator Delta(A)");
  bv->add_option("a", bv_expr)->required();
  bv->add_flag("--divergence", divergence, "Use the divergence route");

  std::string suite;
  SuiteOptions sopts;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  auto* window_opt = verify->add_option("--window", sopts.window, "Exponent bound / cocycle window");
  verify->add_option("--samples", sopts.samples, "Random cases per identity")->capture_default_str();
  verify->add_option("--grid", sopts.grid, "Sweep 2alpha in [-grid, 2], 2beta in [-grid, grid]")->capture_default_str();
  verify->add_option("--max-n", sopts.max_n, "Largest n for the Floer model")->capture_default_str();

  auto* roots = app.add_subcommand("roots", "A_r root system of the sl_{r+1} image");

  std::string cochain_spec = "alpha=1";
  std::int64_t cocycle_window = 4;
  std::string pair_x, pair_y;
  auto* cocycle = app.add_subcommand("cocycle-check", "Chevalley-Eilenberg cocycle check on a window");
  cocycle->add_option("--spec", cochain_spec, "e.g. alpha=-1/2,beta=[-1/2],g=0")->capture_default_str();
  cocycle->add_option("--window", cocycle_window)->capture_default_str();
  cocycle->add_option("--x", pair_x, "Evaluate the CE differential on (x, y)");
  cocycle->add_option("--y", pair_y);

  std::string alpha_s, beta_s;
  bool extract = false;
  std::optional<std::int64_t> apply_index;
  std::string apply_poly = "1";
  auto* rep = app.add_subcommand("rep", "Density representation rho_{alpha,beta}");
  rep->add_option("--alpha", alpha_s)->required();
  rep->add_option("--beta", beta_s)->required();
  rep->add_flag("--extract", extract, "Extract the finite-dimensional sl2 submodule");
  rep->add_option("--apply", apply_index, "Apply rho(xi_i) to --poly");
  rep->add_option("--poly", apply_poly)->capture_default_str();

  std::int64_t floer_n = 1;
  std::int64_t chord_window = 0;
  auto* floer = app.add_subcommand("floer", "Forced sl2 action on V(n) in CW^0(L, L(n))");
  floer->add_option("--n", floer_n)->required();
  floer->add_option("--chords", chord_window, "Proper chords listed on each end")->capture_default_str();

  const std::vector<std::string> args = join_negative_values(raw_args);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (bracket->parsed() || wedge_cmd->parsed()) {
      const bool is_bracket = bracket->parsed();
      const PolyVector a = parse_polyvector(is_bracket ? expr_a : wa, g.rank);
      const PolyVector b = parse_polyvector(is_bracket ? expr_b : wb, g.rank);
      const PolyVector r = is_bracket ? gerstenhaber_bracket(a, b) : wedge(a, b);
      if (g.json) {
        emit_json(out, envelope(is_bracket ? "bracket" : "wedge", raw_args, g.rank, element_result(r)));
      } else {
        out << format(r, notation(g)) << '\n';
      }
      return kExitOk;
    }
    if (bv->parsed()) {
      const PolyVector a = parse_polyvector(bv_expr, g.rank);
      const PolyVector r = divergence ? bv_delta_divergence(a) : bv_delta(a);
      if (g.json) {
        emit_json(out, envelope("bv", raw_args, g.rank, element_result(r)));
      } else {
        out << format(r, notation(g)) << '\n';
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      if (g.rank_given) sopts.rank = g.rank;
      sopts.seed = g.seed;
      if (window_opt->count() == 0) sopts.window = suite == "cocycles" ? 4 : 2;
      const SuiteReport report = run_suite(suite, sopts);
      if (g.json) {
        emit_json(out, envelope("verify", raw_args, g.rank, report.to_json()));
      } else {
        for (const auto& c : report.checks) {
          out << (c.passed() ? "PASS " : "FAIL ") << c.identity << " (" << c.cases - c.failures << "/" << c.cases
              << ")\n";
        }
        out << (report.passed() ? "all checks passed" : "some checks FAILED") << '\n';
      }
      return report.passed() ? kExitOk : kExitCheckFailed;
    }
    if (roots->parsed()) {
      const RootSystemReport report = root_system(g.rank);
      if (g.json) {
        emit_json(out, envelope("roots", raw_args, g.rank, root_report_json(report)));
      } else {
        out << "A_" << report.rank << " roots (e_0..e_" << report.rank << " coordinates):\n";
        for (const auto& r : report.roots) {
          out << "  E" << r.row << r.col << "  [";
          for (std::size_t k = 0; k < r.root.ambient().size(); ++k) out << (k ? "," : "") << r.root.ambient()[k];
          out << "]  " << format(r.field.value(), notation(g)) << '\n';
        }
        out << "cartan_dim " << report.cartan_dim << '\n';
        out << ascii_root_diagram(report);
      }
      return report.matches_a_r && report.homomorphism_ok ? kExitOk : kExitCheckFailed;
    }
    if (cocycle->parsed()) {
      const CE1Cochain c = CE1Cochain::parse(cochain_spec, g.rank);
      Json result{{"spec", cochain_spec}, {"window", cocycle_window}, {"cocycle", is_cocycle_on_window(c, cocycle_window)}};
      if (!pair_x.empty() || !pair_y.empty()) {
        const VectorField x(parse_polyvector(pair_x, g.rank));
        const VectorField y(parse_polyvector(pair_y, g.rank));
        result["differential"] = format(ce_differential_check(c, x, y));
      }
      const bool ok = result["cocycle"].get<bool>();
      if (g.json) {
        emit_json(out, envelope("cocycle-check", raw_args, g.rank, std::move(result)));
      } else {
        out << (ok ? "cocycle" : "not a cocycle") << " on window " << cocycle_window << '\n';
        if (result.contains("differential")) out << "differential " << result["differential"].get<std::string>() << '\n';
      }
      return kExitOk;
    }
    if (rep->parsed()) {
      const DensityRepSpec spec{Rational::parse(alpha_s), Rational::parse(beta_s)};
      Json result{{"alpha", spec.alpha.to_string()}, {"beta", spec.beta.to_string()}};
      if (apply_index) {
        result["applied"] = format(rho_apply(spec, *apply_index, parse_laurent(apply_poly, 1)));
      }
      if (extract) {
        const auto m = extract_finite_sl2_submodule(spec);
        if (m) {
          const Json mj = module_json(*m);
          for (const auto& [k, v] : mj.items()) result[k] = v;
        } else {
          result["exists"] = false;
        }
      }
      if (!apply_index && !extract) result["lie_action_ok"] = verify_lie_action(spec, WeightWindow(-8, 8), 3);
      emit_json(out, envelope("rep", raw_args, 1, std::move(result)));
      return kExitOk;
    }
    if (floer->parsed()) {
      const auto basis = build_chord_basis(floer_n, chord_window);
      const ForcedActionResult res = solve_forced_action(floer_n);
      const DensityIdentification id = identify_with_density_model(floer_n);
      Json result{{"n", floer_n}};
      Json gens = Json::array();
      for (const auto& [gen, lambda] : xi0_eigenvalues(basis, floer_n)) {
        gens.push_back({{"generator", describe(gen, floer_n)}, {"grading", gen.grading_index}, {"xi0", lambda.to_string()}});
      }
      result["generators"] = std::move(gens);
      result["unique_up_to_rescaling"] = res.unique_up_to_rescaling();
      if (!res.orbits.empty()) {
        const auto& sol = res.orbits.front();
        std::vector<std::int64_t> spectrum;
        for (std::size_t k = 0; k < sol.h.rows(); ++k) spectrum.push_back(sol.h(k, k).to_integer());
        const Rational cas = (sol.e * sol.f + sol.f * sol.e + (sol.h * sol.h).scaled(Rational(1, 2)))(0, 0);
        result["dim"] = sol.h.rows();
        result["h_spectrum"] = spectrum;
        result["casimir"] = cas.to_string();
        result["e"] = to_json(sol.e);
        result["f"] = to_json(sol.f);
      }
      result["matches_density_model"] = id.ok();
      Json scale = Json::array();
      for (const auto& s : id.scale) scale.push_back(s.to_string());
      result["rescaling"] = std::move(scale);
      emit_json(out, envelope("floer", raw_args, 1, std::move(result)));
      return res.unique_up_to_rescaling() && id.ok() ? kExitOk : kExitCheckFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace bvtorus::cli
