#include <gtest/gtest.h>

#include "support.hpp"

using namespace hamflux;
using namespace hamflux::testing;

namespace {

struct Heis {
  InstanceBundle b = from_central_extension(heisenberg(1), Subspace::span(3, {unit<Rational>(3, 2)}));
  HamiltonianAnalysis an = analyze(b.module, b.omega);
  MomentumMap m = solve_momentum(an, *b.zeta).map;

  GroupElementData along_x(const Rational& t) const {
    return validate_group_element(an, *b.zeta, Matrix::identity(2),
                                  exp_nilpotent(b.module.action(0), t), "exp(" + to_string(t) + "x)");
  }
};

}  // namespace

TEST(Exp, NilpotentSeries) {
  EXPECT_EQ(exp_nilpotent(Matrix(3, 3), Rational(5)), Matrix::identity(3));
  EXPECT_EQ(exp_nilpotent(mat({{0, 1}, {0, 0}}), Rational(1)), mat({{1, 1}, {0, 1}}));
  const Matrix adx = adjoint_module(heisenberg(1)).action(0);
  const Matrix g = exp_nilpotent(adx, Rational(1, 2));
  EXPECT_EQ(g * vec({0, 1, 0}), (Vector{0, 1, Rational(1, 2)}));
  try {
    exp_nilpotent(Matrix::identity(2), Rational(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotNilpotent);
  }
}

TEST(GroupElement, Validation) {
  const Heis h;
  EXPECT_NO_THROW(identity_element(h.an, *h.b.zeta));
  EXPECT_NO_THROW(h.along_x(Rational(3, 7)));
  const InstanceBundle mb = matrix_algebra_example(2);
  const HamiltonianAnalysis an = analyze(mb.module, mb.omega);
  try {
    validate_group_element(an, *mb.zeta, Matrix::identity(3), Rational(2) * Matrix::identity(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CocycleInvarianceViolation);
  }
  try {
    validate_group_element(an, *mb.zeta, mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}), Matrix::identity(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAutomorphism);
  }
  try {
    validate_group_element(an, *mb.zeta, Matrix::identity(3), Matrix(4, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
  }
  // Ad of exp(e) on sl_2 paired with the identity on M_2 breaks intertwining.
  const Matrix ade = exp_nilpotent(an.algebra().ad(0), Rational(1));
  try {
    validate_group_element(an, *mb.zeta, ade, Matrix::identity(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IntertwiningViolation);
  }
}

TEST(Kappa, HeisenbergFormula) {
  const Heis h;
  const Rational t(5, 3);
  const Matrix k = kappa(h.an, h.along_x(t), h.m);
  EXPECT_EQ(k.column(0), vec({0, 0, 0}));
  EXPECT_EQ(k.column(1), (Vector{0, 0, t}));
  EXPECT_TRUE(kappa(h.an, identity_element(h.an, *h.b.zeta), h.m).is_zero());
}

TEST(Kappa, EquivariantMomentumHasZeroKappa) {
  const InstanceBundle mb = matrix_algebra_example(2);
  const HamiltonianAnalysis an = analyze(mb.module, mb.omega);
  const MomentumMap m = make_momentum_map(an, *mb.zeta, Rational(-1) * sl_basis(2));
  for (std::size_t a = 0; a < 2; ++a) {
    const GroupElementData g = validate_group_element(
        an, *mb.zeta, exp_nilpotent(an.algebra().ad(a), Rational(2)),
        exp_nilpotent(mb.module.action(a), Rational(2)));
    EXPECT_TRUE(kappa(an, g, m).is_zero());
  }
}

TEST(Kappa, CocycleIdentityAndInverse) {
  const Heis h;
  const GroupElementData g1 = h.along_x(Rational(2)), g2 = h.along_x(Rational(-1, 3));
  EXPECT_TRUE(kappa_cocycle_check(h.an, *h.b.zeta, g1, g2, h.m));
  EXPECT_TRUE(kappa_cocycle_check(h.an, *h.b.zeta, g1, identity_element(h.an, *h.b.zeta), h.m));
  const Matrix sum = kappa(h.an, compose(h.an, *h.b.zeta, g1, g2), h.m);
  EXPECT_EQ(sum.column(1), (Vector{0, 0, Rational(5, 3)}));
  const GroupElementData inv = invert(h.an, *h.b.zeta, g1);
  EXPECT_EQ(kappa(h.an, g1, h.m) * g1.Ad, Rational(-1) * kappa(h.an, inv, h.m));
}

TEST(HatAdjoint, HeisenbergFormula) {
  const Heis h;
  const ExtensionPresentation cen = build_central_extension(h.an, h.m);
  const Rational t(7, 2);
  const Matrix ad = hat_adjoint(h.an, h.along_x(t), h.m, cen);
  // (v, a x + b y) -> (v + t b Z, a x + b y), basis (Z, x, y)
  EXPECT_EQ(ad * vec({1, 2, 3}), (Vector{1 + 3 * t, 2, 3}));
  EXPECT_EQ(hat_adjoint(h.an, identity_element(h.an, *h.b.zeta), h.m, cen), Matrix::identity(3));
  const Matrix back = hat_adjoint(h.an, invert(h.an, *h.b.zeta, h.along_x(t)), h.m, cen);
  EXPECT_EQ(ad * back, Matrix::identity(3));
}

TEST(AffineAction, FormulaAndComposition) {
  const Heis h;
  const GroupElementData g1 = h.along_x(Rational(1)), g2 = h.along_x(Rational(4, 5));
  const Matrix zero(3, 2);
  EXPECT_EQ(affine_action(h.an, g1, h.m, zero), Rational(-1) * kappa(h.an, g1, h.m));
  Matrix alpha(3, 2);
  alpha(2, 0) = 3;
  EXPECT_EQ(affine_action(h.an, identity_element(h.an, *h.b.zeta), h.m, alpha), alpha);
  const GroupElementData g12 = compose(h.an, *h.b.zeta, g1, g2);
  EXPECT_EQ(affine_action(h.an, g12, h.m, alpha),
            affine_action(h.an, g1, h.m, affine_action(h.an, g2, h.m, alpha)));
}
