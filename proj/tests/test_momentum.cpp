#include <gtest/gtest.h>

#include "support.hpp"

using namespace hamflux;
using namespace hamflux::testing;

namespace {

struct Instance {
  InstanceBundle bundle;
  HamiltonianAnalysis an;
  explicit Instance(InstanceBundle b) : bundle(std::move(b)), an(analyze(bundle.module, bundle.omega)) {}
  const AlgebraHom& zeta() const { return *bundle.zeta; }
};

Instance heis() {
  return Instance(from_central_extension(heisenberg(1), Subspace::span(3, {unit<Rational>(3, 2)})));
}
Instance mat2() { return Instance(matrix_algebra_example(2)); }

Matrix negated_inclusion() { return Rational(-1) * sl_basis(2); }

}  // namespace

TEST(Momentum, HeisenbergSolution) {
  const Instance s = heis();
  const MomentumSolution sol = solve_momentum(s.an, s.zeta());
  EXPECT_EQ(sol.freedom_dim, 2u);
  // J(x) = X, J(y) = Y up to multiples of Z.
  const Matrix expected = mat({{1, 0}, {0, 1}, {0, 0}});
  const Matrix diff = sol.map.J - expected;
  for (std::size_t a = 0; a < 2; ++a) EXPECT_TRUE(s.an.V_h().contains(diff.column(a)));
  const ObstructionClass obs = tau_cocycle(s.an, sol.map);
  EXPECT_EQ(obs.tau.value({0, 1}), vec({0, 0, 1}));
  EXPECT_FALSE(obs.class_vanishes());
  EXPECT_EQ(pullback_cocycle(s.an, s.zeta()).value({0, 1}), vec({0, 0, -1}));
}

TEST(Momentum, MatrixExampleNegatedInclusionIsEquivariant) {
  const Instance s = mat2();
  const MomentumMap m = make_momentum_map(s.an, s.zeta(), negated_inclusion());
  EXPECT_TRUE(tau_cocycle(s.an, m).vanishes());
  const MomentumEquivalences e = check_equivalences(s.an, m);
  EXPECT_TRUE(e.homomorphism && e.equivariant && e.tau_zero && e.section_hom);
  EXPECT_TRUE(cartan2_check(s.an, s.zeta(), m.J).passed());
}

TEST(Momentum, ZeroHom) {
  const Instance s = mat2();
  const AlgebraHom zero = AlgebraHom::zero(LieAlgebra::abelian(2), s.an.algebra());
  const MomentumSolution sol = solve_momentum(s.an, zero);
  EXPECT_TRUE(sol.map.J.is_zero());
  EXPECT_TRUE(pullback_cocycle(s.an, zero).is_zero());
  EXPECT_TRUE(tau_cocycle(s.an, sol.map).vanishes());
  const ExtensionPresentation cen = build_central_extension(s.an, sol.map);
  EXPECT_EQ(cen.total, LieAlgebra::abelian(3));
}

TEST(Momentum, NotMomentumMapAndImageNotHamiltonian) {
  const Instance s = mat2();
  try {
    make_momentum_map(s.an, s.zeta(), sl_basis(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMomentumMap);
  }
  Cochain omega(2, 2, 1);
  omega.set_value({0, 1}, vec({1}));
  const HamiltonianAnalysis plane = analyze(ModuleAction::trivial(LieAlgebra::abelian(2), 1), omega);
  const AlgebraHom z = AlgebraHom::validated(LieAlgebra::abelian(1), LieAlgebra::abelian(2), mat({{1}, {0}}));
  try {
    solve_momentum(plane, z);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ImageNotHamiltonian);
  }
}

TEST(CentralExtension, HeisenbergIsHeis3) {
  const Instance s = heis();
  const MomentumMap m = solve_momentum(s.an, s.zeta()).map;
  const ExtensionPresentation cen = build_central_extension(s.an, m);
  // basis (Z, x, y): [x, y] = Z
  EXPECT_EQ(cen.total, lie_algebra_from_brackets(3, {{{1, 2}, vec({1, 0, 0})}}));
  EXPECT_TRUE(is_central(cen));
}

TEST(CentralExtension, MatrixExampleIsSl2PlusLine) {
  const Instance s = mat2();
  const MomentumMap m = make_momentum_map(s.an, s.zeta(), negated_inclusion());
  const ExtensionPresentation cen = build_central_extension(s.an, m);
  EXPECT_EQ(cen.total, direct_sum(LieAlgebra::abelian(1), sl(2)));
}

TEST(AbelianExtension, Dimensions) {
  EXPECT_EQ(build_abelian_extension(heis().an, heis().zeta()).total.dim(), 5u);
  const Instance m = mat2();
  EXPECT_EQ(build_abelian_extension(m.an, m.zeta()).total.dim(), 7u);
  const HamiltonianAnalysis zero = analyze(adjoint_module(sl2()), Cochain(2, 3, 3));
  const AlgebraHom z = AlgebraHom::zero(LieAlgebra::abelian(1), sl2());
  const ExtensionPresentation ab = build_abelian_extension(zero, z);
  EXPECT_EQ(ab.total, LieAlgebra::abelian(1));
}

TEST(AbelianExtension, CentralEmbeds) {
  const Instance s = heis();
  const MomentumMap m = solve_momentum(s.an, s.zeta()).map;
  const ExtensionPresentation cen = build_central_extension(s.an, m);
  const ExtensionPresentation ab = build_abelian_extension(s.an, s.zeta());
  EXPECT_TRUE(preserves_brackets(central_into_abelian(s.an, m), cen.total, ab.total));
}

TEST(Equivariantize, MatrixExampleSucceeds) {
  const Instance s = mat2();
  // Shift the equivariant map by a V^h-valued map to make it non-equivariant.
  Matrix j = negated_inclusion();
  j(0, 0) += 1;
  j(3, 0) += 1;
  const MomentumMap m = make_momentum_map(s.an, s.zeta(), j);
  EXPECT_FALSE(tau_cocycle(s.an, m).vanishes());
  const Equivariantization e = equivariantize(s.an, m);
  ASSERT_TRUE(e.success);
  EXPECT_TRUE(is_zero(e.obstruction));
  EXPECT_EQ(e.equivariant->J, negated_inclusion());
}

TEST(Equivariantize, AlreadyEquivariantGivesZeroShift) {
  const Instance s = mat2();
  const Equivariantization e = equivariantize(s.an, make_momentum_map(s.an, s.zeta(), negated_inclusion()));
  ASSERT_TRUE(e.success);
  EXPECT_TRUE(e.shift.is_zero());
}

TEST(Equivariantize, HeisenbergIsObstructed) {
  const Instance s = heis();
  const Equivariantization e = equivariantize(s.an, solve_momentum(s.an, s.zeta()).map);
  EXPECT_FALSE(e.success);
  EXPECT_FALSE(is_zero(e.obstruction));
}

TEST(HatMomentum, Values) {
  const Instance s = heis();
  const MomentumMap m = solve_momentum(s.an, s.zeta()).map;
  const Matrix jhat = hat_momentum(s.an, m);
  EXPECT_EQ(jhat.column(0), vec({0, 0, 1}));
  EXPECT_EQ(jhat.column(1), m.value(0));
  const Instance t = mat2();
  const Matrix jm = hat_momentum(t.an, make_momentum_map(t.an, t.zeta(), negated_inclusion()));
  EXPECT_EQ(jm * vec({3, 1, 0, 0}), add(vec({3, 0, 0, 3}), negated(sl_basis(2).column(0))));
}

TEST(Coboundary, MatrixInclusionIsPrimitive) {
  const Instance s = mat2();
  const MomentumMap m = make_momentum_map(s.an, s.zeta(), negated_inclusion());
  const Matrix f = coboundary_case(s.an, m, Cochain::from_linear_map(sl_basis(2)));
  EXPECT_TRUE(f.is_zero());
  try {
    coboundary_case(s.an, m, Cochain(1, 3, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrimitive);
  }
}

TEST(Coboundary, ZeroOmega) {
  const HamiltonianAnalysis an = analyze(adjoint_module(sl2()), Cochain(2, 3, 3));
  const AlgebraHom id = AlgebraHom::identity(sl2());
  const MomentumSolution sol = solve_momentum(an, id);
  EXPECT_EQ(coboundary_case(an, sol.map, Cochain(1, 3, 3)), sol.map.J);
}

TEST(Cartan2, HeisenbergFailsOnlyEquivariance) {
  const Instance s = heis();
  const Cartan2Report r = cartan2_check(s.an, s.zeta(), solve_momentum(s.an, s.zeta()).map.J);
  EXPECT_TRUE(r.omega_closed);
  EXPECT_TRUE(r.momentum_equation);
  EXPECT_TRUE(r.omega_invariant);
  EXPECT_FALSE(r.J_equivariant);
  EXPECT_FALSE(r.passed());
  const HamiltonianAnalysis zero = analyze(adjoint_module(sl2()), Cochain(2, 3, 3));
  const AlgebraHom z = AlgebraHom::zero(sl2(), sl2());
  EXPECT_TRUE(cartan2_check(zero, z, Matrix(3, 3)).passed());
}

TEST(Baer, HeisenbergEquivalentWithWitnessJ) {
  const Instance s = heis();
  const MomentumMap m = solve_momentum(s.an, s.zeta()).map;
  const BaerProduct bp = baer_product_lie(s.an, m, build_central_extension(s.an, m));
  EXPECT_EQ(bp.extension.total.dim(), 5u);
  ASSERT_TRUE(bp.equivalent);
  EXPECT_EQ(bp.witness_cochain, m.J);
  EXPECT_TRUE(is_equivalence(bp.extension, bp.abelian, bp.witness));
}

TEST(Baer, MatrixExample) {
  const Instance s = mat2();
  const MomentumMap m = make_momentum_map(s.an, s.zeta(), negated_inclusion());
  const BaerProduct bp = baer_product_lie(s.an, m, build_central_extension(s.an, m));
  EXPECT_TRUE(bp.equivalent);
  EXPECT_EQ(bp.witness_cochain, m.J);
}

TEST(Baer, TrivialCentralExtensionGivesSemidirect) {
  const Instance s = mat2();
  const MomentumMap m = make_momentum_map(s.an, s.zeta(), negated_inclusion());
  const BaerProduct bp = baer_product_lie(s.an, m, build_central_extension(s.an, m));
  // τ = 0: the Baer product is V_ω ⋊ g with the module action only.
  const std::size_t kw = 4;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      EXPECT_TRUE(is_zero(slice(bp.extension.total.bracket_basis(kw + a, kw + b), 0, kw)));
}

TEST(Baer, KernelMismatch) {
  const Instance s = heis();
  const MomentumMap m = solve_momentum(s.an, s.zeta()).map;
  ExtensionPresentation wrong = build_abelian_extension(s.an, s.zeta());
  try {
    baer_product_lie(s.an, m, wrong);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::KernelMismatch);
  }
}
