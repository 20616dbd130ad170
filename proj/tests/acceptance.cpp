#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixture_support.hpp"
#include "hamflux/hamflux.hpp"

using namespace hamflux;
using hamflux::testing::fixture_path;
using hamflux::testing::read_fixture;
using hamflux::testing::run_cli;

namespace {

class Criterion {
 public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failed_;
    if (failures_.size() < 5) failures_.push_back(what);
  }
  void note(const std::string& text) { notes_.push_back(text); }
  void crash(const std::string& what) {
    ++failed_;
    failures_.push_back("exception: " + what);
  }

  bool passed() const { return failed_ == 0 && checks_ > 0; }
  std::size_t checks() const { return checks_; }
  std::size_t failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_, notes_;
};

Vector small_vector(std::size_t n, std::mt19937_64& gen) {
  Vector v(n);
  for (auto& x : v) x = Rational(static_cast<long>(gen() % 9) - 4);
  return v;
}

Vector commutator(std::size_t n, const Vector& a, const Vector& b) {
  const Matrix A = unflatten(n, a), B = unflatten(n, b);
  return flatten(A * B - B * A);
}

// 1. Matrix algebras M_2 and M_3.
void matrix_suite(Criterion& c) {
  for (std::size_t n : {2u, 3u}) {
    const std::string tag = "M" + std::to_string(n) + ": ";
    const InstanceBundle b = matrix_algebra_example(n);
    const HamiltonianAnalysis an = analyze(b.module, b.omega);
    const std::size_t h = n * n - 1;
    c.require(an.algebra().dim() == h, tag + "dim h");
    c.require(an.sp().dim() == h && an.ham().dim() == h, tag + "sp = ham = h");
    c.require(an.rad().dim() == 0, tag + "rad = 0");
    c.require(an.V_h() == Subspace::span(n * n, {flatten(Matrix::identity(n))}), tag + "V^h = span{1}");
    c.require(an.V_omega().dim() == n * n, tag + "V_omega = M_n");
    std::mt19937_64 gen(n);
    std::size_t agree = 0;
    for (int pair = 0; pair < 100; ++pair) {
      const Vector a = small_vector(n * n, gen), bb = small_vector(n * n, gen);
      const Vector pb = poisson_bracket(an, a, bb);
      if (pb == negated(commutator(n, a, bb))) ++agree;
    }
    c.require(agree == 100, tag + "{a,b} = -[a,b] on all pairs");
    c.require(cohomology(b.module, 1).dim() == 0, tag + "H^1 = 0");
    c.require(cohomology(b.module, 2).dim() == 0, tag + "H^2 = 0");
    c.note(tag + "{a,b} = -[a,b] on 100/100 pairs, so a -> -a is an isomorphism onto (M_n, [,])");
  }
}

// 2. Central extensions: the Poisson bracket recovers the bracket of hat h.
void central_extension_suite(Criterion& c) {
  const std::vector<std::pair<LieAlgebra, Subspace>> sources = {
      {heisenberg(1), Subspace::span(3, {unit<Rational>(3, 2)})},
      {heisenberg(2), Subspace::span(5, {unit<Rational>(5, 4)})},
      {direct_sum(heisenberg(1), LieAlgebra::abelian(1)), Subspace::span(4, {unit<Rational>(4, 2)})},
      {filiform4(), center_of(filiform4())}};
  const auto bundles = central_extension_examples();
  for (std::size_t e = 0; e < bundles.size(); ++e) {
    const InstanceBundle& b = bundles[e];
    const LieAlgebra& hat_h = sources[e].first;
    const HamiltonianAnalysis an = analyze(b.module, b.omega);
    const std::size_t d = hat_h.dim();
    c.require(an.V_omega().dim() == d, b.name + ": V_omega = hat h");
    bool same = true;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        same = same && poisson_bracket(an, unit<Rational>(d, i), unit<Rational>(d, j)) ==
                           hat_h.bracket_basis(i, j);
    c.require(same, b.name + ": structure constants of {,} equal those of hat h");
    const std::size_t q_center = center_of(hat_h).dim() - sources[e].second.dim();
    c.require(an.hat_ham().dim() == d + q_center, b.name + ": dim hat ham = dim hat h + dim q(z(hat h))");
    c.require(check_expected(b, an).empty(), b.name + ": expected record");
    c.note(b.name + ": dim hat ham = " + std::to_string(an.hat_ham().dim()) + " = " + std::to_string(d) +
           " + " + std::to_string(q_center));
  }
}

Vector random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return small_vector(n, gen);
}

// 3. Chevalley-Eilenberg identities.
void ce_suite(Criterion& c) {
  std::size_t instances = 0;
  for (std::uint64_t seed = 0; seed < 220; ++seed) {
    const auto [n, m] = mixed_dims(seed);
    const InstanceBundle b = random_instance(n, m, seed);
    const ModuleAction& mod = b.module;
    const Vector xi = random_vector(n, seed + 1000), eta = random_vector(n, seed + 2000);
    for (std::size_t p = 0; p <= 2; ++p) {
      const std::size_t size = Cochain(p, n, m).size();
      const Cochain f = Cochain::from_coordinates(p, n, m, random_vector(size, seed * 7 + p));
      if (p + 2 <= kMaxCochainDegree)
        c.require(differential(mod, differential(mod, f)).is_zero(), b.name + ": d^2 = 0");
      Cochain cartan = contract(xi, differential(mod, f));
      if (p > 0) cartan = cartan + differential(mod, contract(xi, f));
      c.require(lie_derivative(mod, xi, f) == cartan, b.name + ": L = d i + i d");
      if (p > 0) {
        const Cochain lhs =
            lie_derivative(mod, xi, contract(eta, f)) - contract(eta, lie_derivative(mod, xi, f));
        c.require(lhs == contract(mod.algebra().bracket(xi, eta), f), b.name + ": [L_xi, i_eta] = i_[xi,eta]");
      }
    }
    ++instances;
  }
  c.require(instances >= 200, "at least 200 instances");
  c.note(std::to_string(instances) + " instances, cochain degrees 0..2");
}

// 4. Poisson algebra and exact sequences.
void poisson_suite(Criterion& c) {
  std::size_t instances = 0, nontrivial = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const InstanceBundle b = mixed_instance(seed, 3);
    const HamiltonianAnalysis an = analyze(b.module, b.omega);
    c.require(an.d_omega().is_zero() || an.algebra().dim() < 3, b.name + ": omega is a cocycle");
    c.require(exactness_report(an).all_passed(), b.name + ": exact sequence dimensions");
    c.require(an.sp() == symplectic_via_closed_contraction(an), b.name + ": two characterizations of sp");
    if (an.V_omega().dim() > an.V_h().dim()) ++nontrivial;
    const Vector u = random_element(an.V_omega(), seed), v = random_element(an.V_omega(), seed + 1),
                 w = random_element(an.V_omega(), seed + 2);
    const Vector jac = add(add(poisson_bracket(an, u, poisson_bracket(an, v, w)),
                               poisson_bracket(an, v, poisson_bracket(an, w, u))),
                           poisson_bracket(an, w, poisson_bracket(an, u, v)));
    c.require(is_zero(jac), b.name + ": Poisson Jacobi identity");
    const Vector uv = poisson_bracket(an, u, v);
    const Vector xu = add(hamiltonian_lift(an, u), random_element(an.rad(), seed + 5));
    const Vector xv = add(hamiltonian_lift(an, v), random_element(an.rad(), seed + 6));
    c.require(negated(an.omega().evaluate({xu, xv})) == uv, b.name + ": lift independence");
    c.require(is_zero(poisson_bracket(an, random_element(an.V_h(), seed + 7), u)), b.name + ": V^h central");
    ++instances;
  }
  c.require(instances >= 100, "at least 100 instances");
  c.require(nontrivial >= 20, "at least 20 instances with V_omega != V^h");
  c.note(std::to_string(instances) + " instances, " + std::to_string(nontrivial) + " with V_omega != V^h");
}

// 5. Momentum maps, obstruction cocycle and the four equivalent conditions.
void momentum_suite(Criterion& c) {
  std::size_t instances = 0, all_true = 0, all_false = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const InstanceBundle b = mixed_instance(seed, 1);
    const HamiltonianAnalysis an = analyze(b.module, b.omega);
    const AlgebraHom zeta = random_hamiltonian_hom(an, seed);
    const MomentumSolution sol = solve_momentum(an, zeta);
    const std::size_t r = zeta.source().dim(), m = b.module.dim();
    const ModuleAction gmod = g_module(an, zeta);
    const ObstructionClass obs = tau_cocycle(an, sol.map);
    c.require(obs.tau == differential(gmod, Cochain::from_linear_map(sol.map.J)) + pullback_cocycle(an, zeta),
              b.name + ": tau = d_g J + omega_g");
    c.require(sol.freedom_dim == r * an.V_h().dim(), b.name + ": freedom = dim Hom(g, V^h)");
    Matrix shift(m, r);
    for (std::size_t a = 0; a < r; ++a) shift.set_column(a, random_element(an.V_h(), seed * 13 + a));
    const MomentumMap other = make_momentum_map(an, zeta, sol.map.J + shift);
    // Any change outside Hom(g, V^h) breaks the momentum equation.
    for (std::size_t a = 0; a < r && an.V_h().dim() < m; ++a) {
      std::size_t i = 0;
      while (an.V_h().contains(unit<Rational>(m, i))) ++i;
      Matrix bad = sol.map.J;
      bad(i, a) += 1;
      bool rejected = false;
      try {
        make_momentum_map(an, zeta, bad);
      } catch (const Error& e) {
        rejected = e.kind() == ErrorKind::NotMomentumMap;
      }
      c.require(rejected, b.name + ": freedom is exactly Hom(g, V^h)");
    }
    for (const MomentumMap* mm : {&sol.map, &other}) {
      const MomentumEquivalences e = check_equivalences(an, *mm);
      c.require(e.all_agree(), b.name + ": four conditions agree");
      (e.tau_zero ? all_true : all_false)++;
    }
    const Equivariantization eq = equivariantize(an, sol.map);
    c.require(eq.success == obs.class_vanishes(), b.name + ": equivariantizable iff [tau] = 0");
    if (eq.success) c.require(check_equivalences(an, *eq.equivariant).tau_zero, b.name + ": shifted tau = 0");
    ++instances;
  }
  c.require(all_true > 0 && all_false > 0, "equivalence exercised in both directions");

  const InstanceBundle hb = central_extension_examples().front();
  const HamiltonianAnalysis han = analyze(hb.module, hb.omega);
  const MomentumMap hm = solve_momentum(han, *hb.zeta).map;
  c.require(!tau_cocycle(han, hm).class_vanishes(), "Heisenberg: nonzero obstruction class");
  const Matrix to_zxy = Matrix::from_columns(3, {unit<Rational>(3, 2), unit<Rational>(3, 0), unit<Rational>(3, 1)});
  c.require(build_central_extension(han, hm).total == change_basis(heisenberg(1), to_zxy),
            "Heisenberg: g_cen = heis3");

  const InstanceBundle sb = matrix_algebra_example(2);
  const HamiltonianAnalysis san = analyze(sb.module, sb.omega);
  const Equivariantization seq = equivariantize(san, solve_momentum(san, *sb.zeta).map);
  c.require(seq.success && is_zero(seq.obstruction), "sl2: equivariantizes with obstruction 0");
  c.note(std::to_string(instances) + " random instances; " + std::to_string(all_true) + " equivariant and " +
         std::to_string(all_false) + " non-equivariant momentum maps");
}

// 6. Group elements along exp(t (x + 2y)) in the Heisenberg example.
void group_suite(Criterion& c) {
  const InstanceBundle b = central_extension_examples().front();
  const HamiltonianAnalysis an = analyze(b.module, b.omega);
  const AlgebraHom& zeta = *b.zeta;
  const MomentumMap m = solve_momentum(an, zeta).map;
  const ExtensionPresentation cen = build_central_extension(an, m);
  const Matrix X = b.module.action_of(Vector{1, 2});
  auto element = [&](const Rational& t) {
    return validate_group_element(an, zeta, Matrix::identity(2), exp_nilpotent(X, t), "exp(" + to_string(t) + ")");
  };
  std::vector<Rational> ts;
  for (int k = 0; k < 20; ++k) ts.push_back(Rational(2 * k - 19) / (k % 4 + 2));
  Matrix alpha(3, 2);
  alpha(2, 0) = 2;
  alpha(2, 1) = Rational(-1) / 3;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const GroupElementData g = element(ts[k]);
    const GroupElementData h = element(ts[(k + 7) % ts.size()]);
    const std::string tag = g.label + ": ";
    const Matrix kap = kappa(an, g, m);
    bool in_vh = true;
    for (std::size_t a = 0; a < kap.cols(); ++a) in_vh = in_vh && an.V_h().contains(kap.column(a));
    c.require(in_vh, tag + "kappa in V^h");
    c.require(kappa_cocycle_check(an, zeta, g, h, m), tag + "group cocycle identity");
    c.require(kap * g.Ad == Rational(-1) * kappa(an, invert(an, zeta, g), m), tag + "kappa(g) Ad(g) = -kappa(g^-1)");
    const Matrix hat = hat_adjoint(an, g, m, cen);
    c.require(preserves_brackets(hat, cen.total, cen.total) && inverse(hat).has_value(), tag + "hat Ad automorphism");
    c.require(affine_action(an, compose(an, zeta, g, h), m, alpha) ==
                  affine_action(an, g, m, affine_action(an, h, m, alpha)),
              tag + "affine action composes");
  }
  c.note("20 values of t, paired with a shifted value for the composition checks");
}

// 7. Baer product against the abelian extension.
void baer_suite(Criterion& c) {
  std::vector<InstanceBundle> bundles = gallery_instances();
  std::vector<std::optional<AlgebraHom>> zetas;
  for (const auto& b : bundles) zetas.push_back(b.zeta);
  for (std::uint64_t seed = 0; seed < 40; ++seed) bundles.push_back(mixed_instance(seed, 5));
  std::size_t count = 0;
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    const InstanceBundle& b = bundles[i];
    const HamiltonianAnalysis an = analyze(b.module, b.omega);
    if (i < zetas.size() && !zetas[i]) continue;
    const AlgebraHom zeta = i < zetas.size() ? *zetas[i] : random_hamiltonian_hom(an, i);
    const MomentumMap m = solve_momentum(an, zeta).map;
    const BaerProduct bp = baer_product_lie(an, m, build_central_extension(an, m));
    c.require(bp.equivalent, b.name + ": Baer product equivalent to the abelian extension");
    c.require(is_equivalence(bp.extension, bp.abelian, bp.witness), b.name + ": explicit witness");
    ++count;
  }
  c.note(std::to_string(count) + " instances (" + std::to_string(bundles.size() - 40) +
         " named gallery instances and 40 random)");
}

template <class F>
bool throws_hypothesis_violation(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == ErrorKind::HypothesisViolation;
  }
  return false;
}

// 8. Noether propositions.
void noether_suite(Criterion& c) {
  std::size_t instances = 0, violations = 0;
  for (std::uint64_t seed = 0; seed < 90 && instances < 60; ++seed) {
    const InstanceBundle b = mixed_instance(seed, 2);
    const HamiltonianAnalysis an = analyze(b.module, b.omega);
    const NoetherScenario sc = noether_scenario(an, seed);
    const MomentumMap m1 = solve_momentum(an, sc.zeta1).map;
    const MomentumMap m2 = make_momentum_map(an, sc.zeta2, sc.J2);
    const NoetherReport flow = invariant_flow_check(an, m1, sc.v, sc.xi);
    c.require(flow.hypothesis_ok && flow.conclusion_ok, b.name + ": invariant flow");
    const NoetherReport both = commuting_actions_check(an, m1, m2);
    c.require(both.hypothesis_ok && both.conclusion_ok, b.name + ": commuting actions");
    // An admissible v that is not g-invariant must be rejected.
    const Subspace fixed = invariant_vectors(g_module(an, sc.zeta1));
    for (const auto& v : an.V_omega().basis_vectors())
      if (!fixed.contains(v)) {
        c.require(throws_hypothesis_violation([&] { invariant_flow_check(an, m1, v, hamiltonian_lift(an, v)); }),
                  b.name + ": non-invariant v rejected");
        ++violations;
        break;
      }
    ++instances;
  }
  c.require(instances >= 50, "at least 50 engineered instances");

  const InstanceBundle hb = central_extension_examples().front();
  const HamiltonianAnalysis han = analyze(hb.module, hb.omega);
  const MomentumMap hm = solve_momentum(han, *hb.zeta).map;
  c.require(throws_hypothesis_violation([&] { invariant_flow_check(han, hm, Vector{1, 0, 0}, Vector{1, 0}); }),
            "fixture: v not invariant");
  c.require(throws_hypothesis_violation([&] { invariant_flow_check(han, hm, Vector{0, 0, 1}, Vector{1, 0}); }),
            "fixture: d_h v != i_xi omega");
  c.require(throws_hypothesis_violation([&] { commuting_actions_check(han, hm, hm); }),
            "fixture: J_2 not in V^{g_1}");
  const auto cli = run_cli({"noether", fixture_path("noether_violation.json")});
  c.require(cli.code == cli::kMathematical && cli.out.empty() &&
                cli.err.find("HypothesisViolation") != std::string::npos,
            "CLI fixture reports HypothesisViolation and no conclusion");
  violations += 4;
  c.note(std::to_string(instances) + " engineered instances, " + std::to_string(violations) +
         " hypothesis violations rejected");
}

// 9. Command line round trips, exit codes and re-analyzable extensions.
void cli_suite(Criterion& c) {
  for (const char* name : {"sl2_m2.json", "heisenberg.json", "random_seed0_2x2.json"}) {
    const std::string text = read_fixture(name);
    c.require(io::dump(io::to_json(io::parse_problem(text))) == text, std::string(name) + ": bit-exact round trip");
  }
  c.require(io::parse_problem(read_fixture("sl2_m2.json")) == io::problem_from_bundle(matrix_algebra_example(2)),
            "sl2_m2 fixture equals the builder");
  const std::vector<std::pair<std::vector<std::string>, std::string>> golden = {
      {{"analyze", "--json", "sl2_m2.json"}, "sl2_m2.analyze.json"},
      {{"momentum", "heisenberg_group.json"}, "heisenberg_group.momentum.json"},
      {{"extend", "--kind", "cen", "heisenberg.json"}, "heisenberg.extend_cen.json"},
      {{"extend", "--kind", "baer", "heisenberg.json"}, "heisenberg.extend_baer.json"},
  };
  for (auto [args, file] : golden) {
    args.back() = fixture_path(args.back());
    c.require(run_cli(args).out == read_fixture("golden/" + file), file + ": golden output");
  }
  const std::vector<std::pair<std::vector<std::string>, int>> codes = {
      {{"analyze", "sl2_m2.json"}, cli::kOk},
      {{"frobnicate"}, cli::kUsage},
      {{"analyze", "broken_jacobi.json"}, cli::kValidation},
      {{"validate", "bad_rational.json"}, cli::kValidation},
      {{"extend", "--kind", "cen", "not_hamiltonian.json"}, cli::kMathematical},
  };
  for (auto [args, code] : codes) {
    if (args.size() > 1) args.back() = fixture_path(args.back());
    c.require(run_cli(args).code == code, args.front() + " " + args.back() + ": exit code " + std::to_string(code));
  }
  std::size_t reanalyzed = 0;
  for (const char* fixture : {"heisenberg.json", "sl2_m2.json", "zeta_zero.json", "heisenberg_group.json"})
    for (const char* kind : {"cen", "ab", "baer"}) {
      const auto e = run_cli({"extend", "--kind", kind, fixture_path(fixture)});
      c.require(e.code == 0, std::string(fixture) + " " + kind + ": extend");
      if (e.code != 0) continue;
      const io::ProblemFile p = io::parse_problem(e.out);
      c.require(cli::cmd_analyze(p)["passed"].get<bool>(), std::string(fixture) + " " + kind + ": re-analyze");
      ++reanalyzed;
    }
  c.note(std::to_string(reanalyzed) + " emitted extensions re-analyzed");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"matrix-algebra suite (n = 2, 3)", matrix_suite},
      {"central-extension recovery", central_extension_suite},
      {"Chevalley-Eilenberg identities", ce_suite},
      {"Poisson algebra and exact sequences", poisson_suite},
      {"momentum maps and obstruction", momentum_suite},
      {"Heisenberg group-element suite", group_suite},
      {"Baer-product equivalence", baer_suite},
      {"Noether propositions", noether_suite},
      {"CLI round trips and exit codes", cli_suite},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.crash(e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && c.passed();
    std::ostringstream line;
    line << (c.passed() ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " ("
         << c.checks() - c.failed() << "/" << c.checks() << " checks, " << static_cast<int>(secs * 1000) << " ms)";
    std::cout << line.str() << "\n";
    for (const auto& n : c.notes()) std::cout << "    " << n << "\n";
    for (const auto& f : c.failures()) std::cout << "    failed: " << f << "\n";
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? 0 : 1;
}
