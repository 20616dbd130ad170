#include <iostream>

#include "hamflux/hamflux.hpp"

using namespace hamflux;

namespace {

void show_dims(const InstanceBundle& b, const HamiltonianAnalysis& an) {
  const ExactnessReport r = exactness_report(an);
  std::cout << b.name << ": dim h = " << an.algebra().dim() << ", dim V = " << an.module().dim()
            << " | sp " << r.sp << ", ham " << r.ham << ", rad " << r.rad << ", h_omega " << r.h_omega
            << ", V^h " << r.V_h << ", V_omega " << r.V_omega << ", hat ham " << an.hat_ham().dim()
            << (r.all_passed() ? "" : "  [exactness FAILED]") << "\n";
}

}  // namespace

int main() {
  std::cout << "== gallery ==\n";
  for (const InstanceBundle& b : gallery_instances()) show_dims(b, analyze(b.module, b.omega));

  std::cout << "\n== Heisenberg: momentum map and obstruction ==\n";
  const InstanceBundle h = central_extension_examples().front();
  const HamiltonianAnalysis an = analyze(h.module, h.omega);
  const MomentumMap m = solve_momentum(an, *h.zeta).map;
  const ObstructionClass obs = tau_cocycle(an, m);
  std::cout << "J(x) = " << to_string(m.value(0)) << ", J(y) = " << to_string(m.value(1)) << "\n"
            << "tau(x, y) = " << to_string(obs.tau.value({0, 1})) << ", class in H^2(g, V^h) = "
            << to_string(obs.h2_class) << "\n";
  const ExtensionPresentation cen = build_central_extension(an, m);
  std::cout << "g_cen has dim " << cen.total.dim() << ", [e1, e2] = " << to_string(cen.total.bracket_basis(1, 2))
            << " (basis Z, x, y)\n";
  const BaerProduct bp = baer_product_lie(an, m, cen);
  std::cout << "Baer product equivalent to the abelian extension: " << (bp.equivalent ? "yes" : "no") << "\n";

  std::cout << "\n== Heisenberg: group elements exp(t x) ==\n";
  for (const Rational& t : {Rational(1), Rational(-2), Rational(Rational(3) / 4)}) {
    const GroupElementData g = validate_group_element(an, *h.zeta, Matrix::identity(2),
                                                      exp_nilpotent(h.module.action(0), t), "exp(" + to_string(t) + " x)");
    const Matrix k = kappa(an, g, m);
    std::cout << g.label << ": kappa(x) = " << to_string(k.column(0)) << ", kappa(y) = " << to_string(k.column(1))
              << "\n";
  }

  std::cout << "\n== matrix algebra M_2 ==\n";
  const InstanceBundle mb = matrix_algebra_example(2);
  const HamiltonianAnalysis man = analyze(mb.module, mb.omega);
  const Vector a = flatten(Matrix::from_rows(2, {Vector{1, 2}, Vector{0, 1}}));
  const Vector b = flatten(Matrix::from_rows(2, {Vector{0, 0}, Vector{3, -1}}));
  std::cout << "{a, b} = " << to_string(poisson_bracket(man, a, b)) << "\n";
  const Equivariantization eq = equivariantize(man, solve_momentum(man, *mb.zeta).map);
  std::cout << "sl_2 momentum map equivariantizable: " << (eq.success ? "yes" : "no") << "\n";
  return 0;
}
