#include <gtest/gtest.h>

#include "support.hpp"

using namespace hamflux;
using namespace hamflux::testing;

namespace {

Cochain random_like(std::size_t p, std::size_t n, std::size_t m, long seed) {
  Cochain c(p, n, m);
  Vector coords(c.size());
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = Rational((seed * 31 + 7 * i) % 5) - 2;
  return Cochain::from_coordinates(p, n, m, coords);
}

}  // namespace

TEST(Cochain, Antisymmetry) {
  Cochain c(2, 3, 1);
  c.set_value({0, 2}, vec({5}));
  EXPECT_EQ(c.value({2, 0}), vec({-5}));
  EXPECT_EQ(c.value({1, 1}), vec({0}));
  EXPECT_EQ(c.evaluate({vec({1, 0, 0}), vec({0, 0, 2})}), vec({10}));
}

TEST(Differential, ZeroCochainIsActionTranspose) {
  const ModuleAction ad = adjoint_module(sl2());
  const Vector v = vec({1, 0, 0});
  const Cochain dv = differential(ad, Cochain::constant(3, v));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(dv.value({i}), ad.action(i) * v);
}

TEST(Differential, SquaresToZero) {
  const ModuleAction mods[] = {adjoint_module(sl2()), dual_module(adjoint_module(heisenberg(1))),
                               ModuleAction::trivial(filiform4(), 2)};
  for (const auto& mod : mods)
    for (std::size_t p = 0; p + 2 <= kMaxCochainDegree; ++p) {
      const Cochain c = random_like(p, mod.algebra_dim(), mod.dim(), static_cast<long>(p));
      EXPECT_TRUE(differential(mod, differential(mod, c)).is_zero());
    }
}

TEST(Differential, UnsupportedDegree) {
  const ModuleAction ad = adjoint_module(sl2());
  try {
    differential(ad, Cochain(3, 3, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedDegree);
  }
}

TEST(Contraction, DegreeZero) {
  try {
    contract(vec({1}), Cochain(0, 1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeZero);
  }
}

TEST(Cartan, LieDerivativeFormula) {
  const ModuleAction mod = dual_module(adjoint_module(sl2()));
  const Vector xi = vec({1, -2, 3});
  for (std::size_t p = 1; p <= 2; ++p) {
    const Cochain c = random_like(p, 3, 3, 11);
    const Cochain lhs = lie_derivative(mod, xi, c);
    const Cochain rhs = contract(xi, differential(mod, c)) + differential(mod, contract(xi, c));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Cohomology, Sl2AdjointIsAcyclicInLowDegree) {
  const ModuleAction ad = adjoint_module(sl2());
  EXPECT_EQ(cohomology(ad, 0).dim(), 0u);
  EXPECT_EQ(cohomology(ad, 1).dim(), 0u);
  EXPECT_EQ(cohomology(ad, 2).dim(), 0u);
}

TEST(Cohomology, AbelianTrivial) {
  const ModuleAction triv = ModuleAction::trivial(LieAlgebra::abelian(2), 1);
  EXPECT_EQ(cohomology(triv, 1).dim(), 2u);
  EXPECT_EQ(cohomology(triv, 2).dim(), 1u);
}

TEST(Cohomology, HeisenbergTrivial) {
  const ModuleAction triv = ModuleAction::trivial(heisenberg(1), 1);
  EXPECT_EQ(cohomology(triv, 1).dim(), 2u);
  EXPECT_EQ(cohomology(triv, 2).dim(), 2u);
}

TEST(Cohomology, ClassOfNonCocycleThrows) {
  const ModuleAction triv = ModuleAction::trivial(heisenberg(1), 1);
  const CohomologySpace h1 = cohomology(triv, 1);
  Cochain c(1, 3, 1);
  c.set_value({2}, vec({1}));
  try {
    h1.class_of(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCocycle);
  }
}
