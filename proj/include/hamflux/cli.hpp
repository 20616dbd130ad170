#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hamflux/group_action.hpp"
#include "hamflux/io.hpp"
#include "hamflux/noether.hpp"

namespace hamflux::cli {

using io::json;

enum ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2, kMathematical = 3 };

inline int exit_code_for(ErrorKind kind) {
  return is_validation_failure(kind) ? kValidation : kMathematical;
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path, "/");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json names_to_json(const std::vector<std::pair<std::string, bool>>& checks) {
  json out = json::object();
  for (const auto& [name, ok] : checks) out[name] = ok;
  return out;
}

inline json presentation_to_json(const ExtensionPresentation& e, const std::string& kind) {
  return {{"kind", kind},
          {"kernel_dim", e.kernel_dim()},
          {"base_dim", e.base_dim()},
          {"kernel_injection", io::to_json(e.kernel_injection)},
          {"projection", io::to_json(e.projection)},
          {"section", io::to_json(e.section)},
          {"kernel_basis", io::to_json(e.kernel_basis)}};
}

inline json report_to_json(const NoetherReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back({{"label", w.label}, {"residual", io::to_json(w.residual)}});
  return {{"hypothesis_ok", r.hypothesis_ok},
          {"conclusion_ok", r.conclusion_ok},
          {"checks", names_to_json(r.checks)},
          {"witnesses", std::move(witnesses)}};
}

inline const AlgebraHom& require_zeta(const io::ProblemFile& p) {
  if (!p.zeta) throw Error(ErrorKind::ValidationError, "this command needs zeta", "/zeta");
  return *p.zeta;
}

// The file's momentum matrix when present, otherwise the canonical solution.
inline MomentumMap momentum_of(const HamiltonianAnalysis& an, const io::ProblemFile& p) {
  const AlgebraHom& zeta = require_zeta(p);
  if (p.momentum)
    return io::detail::at_path("/momentum", [&] { return make_momentum_map(an, zeta, *p.momentum); });
  return solve_momentum(an, zeta).map;
}

inline std::vector<GroupElementData> group_elements_of(const HamiltonianAnalysis& an,
                                                       const io::ProblemFile& p) {
  std::vector<GroupElementData> out;
  for (std::size_t e = 0; e < p.group_elements.size(); ++e) {
    const auto& g = p.group_elements[e];
    out.push_back(io::detail::at_path("/group_elements/" + std::to_string(e), [&] {
      return validate_group_element(an, require_zeta(p), g.Ad, g.rhoV, g.label);
    }));
  }
  return out;
}

}  // namespace detail

/// Parses and runs every structural check the document supports.
inline json cmd_validate(const io::ProblemFile& p) {
  const HamiltonianAnalysis an = analyze(p.module, p.omega);
  json out = {{"valid", true}, {"algebra_dim", p.algebra.dim()}, {"module_dim", p.module.dim()}};
  if (p.zeta) {
    const MomentumMap m = detail::momentum_of(an, p);
    out["zeta_dim"] = m.source_dim();
    out["group_elements"] = detail::group_elements_of(an, p).size();
  }
  return out;
}

inline json cmd_analyze(const io::ProblemFile& p) {
  const HamiltonianAnalysis an = analyze(p.module, p.omega);
  const ExactnessReport r = exactness_report(an);
  std::vector<Vector> fluxes;
  for (const auto& xi : an.sp().basis_vectors()) fluxes.push_back(flux_class(an, xi));
  const std::size_t flux_rank = Subspace::span(an.h1().dim(), fluxes).dim();
  json dims = {{"sp", r.sp},           {"ham", r.ham},
               {"rad", r.rad},         {"h_omega", r.h_omega},
               {"V_h", r.V_h},         {"V_omega", r.V_omega},
               {"hat_ham", an.hat_ham().dim()}, {"d_V_omega", r.d_V_omega},
               {"oneforms_omega", r.oneforms_omega}, {"H1", an.h1().dim()}};
  json out = {{"dims", std::move(dims)},
              {"flux_rank", flux_rank},
              {"exactness", detail::names_to_json(r.checks)},
              {"passed", r.all_passed()}};
  if (p.zeta) {
    bool into_ham = true;
    for (std::size_t a = 0; a < p.zeta->source().dim(); ++a)
      into_ham = into_ham && an.ham().contains(p.zeta->image(a));
    out["zeta"] = {{"dim", p.zeta->source().dim()}, {"into_ham", into_ham}};
  }
  return out;
}

inline std::string analyze_text(const json& report) {
  std::ostringstream os;
  for (const auto& [name, value] : report["dims"].items()) os << name << " " << value.dump() << "\n";
  os << "flux_rank " << report["flux_rank"].dump() << "\n";
  for (const auto& [name, ok] : report["exactness"].items())
    os << (ok.get<bool>() ? "ok   " : "FAIL ") << name << "\n";
  if (report.contains("zeta"))
    os << "zeta into ham " << (report["zeta"]["into_ham"].get<bool>() ? "yes" : "no") << "\n";
  return os.str();
}

/// A problem document whose lie_algebra is the requested extension of g.
inline json cmd_extend(const io::ProblemFile& p, const std::string& kind) {
  const HamiltonianAnalysis an = analyze(p.module, p.omega);
  const MomentumMap m = detail::momentum_of(an, p);
  json out = {{"schema", std::string(io::kSchema)}};
  if (kind == "cen") {
    const ExtensionPresentation e = build_central_extension(an, m);
    out["lie_algebra"] = io::to_json(e.total);
    out["extension"] = detail::presentation_to_json(e, kind);
  } else if (kind == "ab") {
    const ExtensionPresentation e = build_abelian_extension(an, m.zeta);
    out["lie_algebra"] = io::to_json(e.total);
    out["extension"] = detail::presentation_to_json(e, kind);
  } else {
    const BaerProduct b = baer_product_lie(an, m, build_central_extension(an, m));
    out["lie_algebra"] = io::to_json(b.extension.total);
    out["extension"] = detail::presentation_to_json(b.extension, kind);
    out["abelian"] = {{"lie_algebra", io::to_json(b.abelian.total)},
                      {"extension", detail::presentation_to_json(b.abelian, "ab")}};
    out["witness"] = {{"matrix", io::to_json(b.witness)},
                      {"cochain", io::to_json(b.witness_cochain)},
                      {"equivalent", b.equivalent}};
  }
  return out;
}

inline json cmd_momentum(const io::ProblemFile& p) {
  const HamiltonianAnalysis an = analyze(p.module, p.omega);
  const MomentumMap m = detail::momentum_of(an, p);
  const ObstructionClass obs = tau_cocycle(an, m);
  const Equivariantization eq = equivariantize(an, m);
  json out = {{"J", io::to_json(m.J)},
              {"freedom_dim", m.source_dim() * an.V_h().dim()},
              {"tau", io::cochain_entries(obs.tau)},
              {"equivariantizable", eq.success},
              {"obstruction", io::to_json(obs.h2_class)}};
  if (eq.success) out["equivariant_J"] = io::to_json(eq.equivariant->J);
  const auto elements = detail::group_elements_of(an, p);
  if (!elements.empty()) {
    json list = json::array();
    for (const auto& g : elements)
      list.push_back({{"label", g.label}, {"kappa", io::to_json(kappa(an, g, m))}});
    out["group_elements"] = std::move(list);
  }
  return out;
}

inline json noether_reports(const HamiltonianAnalysis& an, const io::ProblemFile& p) {
  const MomentumMap m1 = detail::momentum_of(an, p);
  json out = json::object();
  bool all = true;
  if (!p.flows.empty()) {
    json list = json::array();
    for (const auto& f : p.flows) {
      const NoetherReport r = invariant_flow_check(an, m1, f.v, f.xi);
      all = all && r.conclusion_ok;
      list.push_back(detail::report_to_json(r));
    }
    out["invariant_flow"] = std::move(list);
  }
  if (p.second_action) {
    const auto& s = *p.second_action;
    const MomentumMap m2 =
        s.momentum ? io::detail::at_path("/noether/second_action/momentum",
                                         [&] { return make_momentum_map(an, s.zeta, *s.momentum); })
                   : solve_momentum(an, s.zeta).map;
    const NoetherReport r = commuting_actions_check(an, m1, m2);
    all = all && r.conclusion_ok;
    out["commuting_actions"] = detail::report_to_json(r);
  }
  out["conclusions_hold"] = all;
  return out;
}

inline json cmd_noether(const io::ProblemFile& p) {
  const HamiltonianAnalysis an = analyze(p.module, p.omega);
  return noether_reports(an, p);
}

/// An engineered instance satisfying both hypotheses, with its reports.
inline json cmd_noether_seed(std::uint64_t seed) {
  const InstanceBundle b = mixed_instance(seed, 2);
  const HamiltonianAnalysis an = analyze(b.module, b.omega);
  const NoetherScenario sc = noether_scenario(an, seed);
  io::ProblemFile p = io::problem_from_bundle(b);
  p.zeta = sc.zeta1;
  p.momentum = solve_momentum(an, sc.zeta1).map.J;
  p.flows.push_back({sc.v, sc.xi});
  p.second_action = io::SecondActionSpec{sc.zeta2, sc.J2};
  json out = noether_reports(an, p);
  out["instance"] = b.name;
  out["problem"] = io::to_json(p);
  return out;
}

inline json cmd_gallery(const std::string& name, std::uint64_t seed, std::size_t n, std::size_t m) {
  InstanceBundle b = [&] {
    if (name == "matrix") return matrix_algebra_example(n);
    if (name == "heisenberg")
      return from_central_extension(heisenberg(1), Subspace::span(3, {unit<Rational>(3, 2)}));
    if (name == "central") return random_central_instance(n, seed);
    return random_instance(n, m, seed);
  }();
  return io::to_json(io::problem_from_bundle(b));
}

/// Runs the command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact hamiltonian analysis of Lie algebra modules", "hamflux"};
  app.require_subcommand(1);
  std::string file, kind = "cen", name;
  bool as_json = false;
  std::optional<std::uint64_t> seed;
  std::uint64_t gallery_seed = 0;
  std::size_t n = 2, m = 2;

  auto* validate = app.add_subcommand("validate", "parse and validate a problem file");
  validate->add_option("file", file, "problem file")->required();
  auto* analyze_cmd = app.add_subcommand("analyze", "subalgebra and module dimensions");
  analyze_cmd->add_option("file", file, "problem file")->required();
  analyze_cmd->add_flag("--json", as_json, "emit JSON");
  auto* extend = app.add_subcommand("extend", "emit an extension of g as a problem file");
  extend->add_option("file", file, "problem file")->required();
  extend->add_option("--kind", kind, "cen, ab or baer")
      ->check(CLI::IsMember({"cen", "ab", "baer"}));
  auto* momentum = app.add_subcommand("momentum", "momentum map and obstruction class");
  momentum->add_option("file", file, "problem file")->required();
  auto* noether = app.add_subcommand("noether", "Noether checks from a file or an engineered seed");
  noether->add_option("file", file, "problem file");
  noether->add_option("--seed", seed, "engineered random instance");
  auto* gallery = app.add_subcommand("gallery", "emit a gallery instance as a problem file");
  gallery->add_option("name", name, "matrix, heisenberg, central or random")
      ->required()
      ->check(CLI::IsMember({"matrix", "heisenberg", "central", "random"}));
  gallery->add_option("--seed", gallery_seed, "random seed");
  gallery->add_option("--n", n, "algebra dimension (matrix size for matrix)");
  gallery->add_option("--m", m, "module dimension (random)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  if (noether->parsed() && file.empty() && !seed) {
    err << "noether needs a file or --seed\n";
    return kUsage;
  }

  try {
    auto load = [&] { return io::parse_problem(detail::read_file(file)); };
    json result;
    if (validate->parsed()) {
      result = cmd_validate(load());
    } else if (analyze_cmd->parsed()) {
      result = cmd_analyze(load());
      if (!as_json) {
        out << analyze_text(result);
        return kOk;
      }
    } else if (extend->parsed()) {
      result = cmd_extend(load(), kind);
    } else if (momentum->parsed()) {
      result = cmd_momentum(load());
    } else if (noether->parsed()) {
      result = seed ? cmd_noether_seed(*seed) : cmd_noether(load());
    } else {
      result = cmd_gallery(name, gallery_seed, n, m);
    }
    out << io::dump(result);
    return kOk;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace hamflux::cli
