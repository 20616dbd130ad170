#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hamflux/hamiltonian.hpp"

namespace hamflux {

/// A momentum map J: g -> V for zeta: g -> ham(h, omega), stored as the
/// dim V x dim g matrix whose column a is J(e_a). Invariant:
/// d_h(J(X)) = i_{zeta(X)} omega for every basis vector X.
struct MomentumMap {
  AlgebraHom zeta;
  Matrix J;

  const LieAlgebra& source() const noexcept { return zeta.source(); }
  std::size_t source_dim() const noexcept { return zeta.source().dim(); }
  Vector value(std::size_t a) const { return J.column(a); }
};

namespace detail {

inline void require_into_ham(const HamiltonianAnalysis& an, const AlgebraHom& zeta) {
  if (!(zeta.target() == an.algebra()))
    throw Error(ErrorKind::DimensionMismatch, "zeta must target the analyzed algebra");
  for (std::size_t a = 0; a < zeta.source().dim(); ++a)
    if (!an.ham().contains(zeta.image(a)))
      throw Error(ErrorKind::ImageNotHamiltonian,
                  "zeta(e_" + std::to_string(a) + ") = " + to_string(zeta.image(a)) +
                      " is not hamiltonian");
}

// Internal identities that hold for all valid inputs; failing one is a bug.
inline void ensure(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("identity failed: ") + what);
}

}  // namespace detail

/// Validates a candidate momentum map. Throws ImageNotHamiltonian or NotMomentumMap.
inline MomentumMap make_momentum_map(const HamiltonianAnalysis& an, const AlgebraHom& zeta,
                                     const Matrix& J) {
  detail::require_into_ham(an, zeta);
  if (J.rows() != an.module().dim() || J.cols() != zeta.source().dim())
    throw Error(ErrorKind::DimensionMismatch, "momentum matrix must be dim V x dim g");
  for (std::size_t a = 0; a < J.cols(); ++a)
    if (an.d0() * J.column(a) != an.contraction() * zeta.image(a))
      throw Error(ErrorKind::NotMomentumMap,
                  "d_h J(e_" + std::to_string(a) + ") != i_zeta(e_" + std::to_string(a) + ") omega");
  return {zeta, J};
}

/// V as a g-module through zeta.
inline ModuleAction g_module(const HamiltonianAnalysis& an, const AlgebraHom& zeta) {
  return pullback_module(an.module(), zeta);
}

/// omega_g(X, Y) = omega(zeta X, zeta Y), a cocycle for the g-module V.
inline Cochain pullback_cocycle(const HamiltonianAnalysis& an, const AlgebraHom& zeta) {
  detail::require_into_ham(an, zeta);
  const std::size_t r = zeta.source().dim();
  Cochain out(2, r, an.module().dim());
  for (const auto& ab : index_tuples(r, 2))
    out.set_value(ab, an.omega().evaluate({zeta.image(ab[0]), zeta.image(ab[1])}));
  if (r >= 3) detail::ensure(differential(g_module(an, zeta), out).is_zero(), "d_g omega_g = 0");
  return out;
}

struct MomentumSolution {
  MomentumMap map;
  Subspace invariants;      // V^h: momentum maps are unique up to Hom(g, V^h)
  std::size_t freedom_dim;  // dim g * dim V^h
};

/// Canonical momentum map: each J(e_a) is the particular solution of
/// d_h v = i_{zeta(e_a)} omega with free coordinates set to zero.
inline MomentumSolution solve_momentum(const HamiltonianAnalysis& an, const AlgebraHom& zeta) {
  detail::require_into_ham(an, zeta);
  const std::size_t r = zeta.source().dim();
  const LinearSolver solver(an.d0());
  Matrix J(an.module().dim(), r);
  for (std::size_t a = 0; a < r; ++a) {
    auto v = solver.solve(an.contraction() * zeta.image(a));
    detail::ensure(v.has_value(), "hamiltonian images admit momenta");
    J.set_column(a, *v);
  }
  return {MomentumMap{zeta, std::move(J)}, an.V_h(), r * an.V_h().dim()};
}

/// tau(X, Y) = X.J(Y) - J([X, Y]) as a V-valued 2-cochain on g.
inline Cochain tau_values(const HamiltonianAnalysis& an, const MomentumMap& m) {
  const ModuleAction gmod = g_module(an, m.zeta);
  const LieAlgebra& g = m.source();
  Cochain tau(2, g.dim(), an.module().dim());
  for (const auto& ab : index_tuples(g.dim(), 2)) {
    Vector v = gmod.action(ab[0]) * m.value(ab[1]);
    v = sub(std::move(v), m.J * g.bracket_basis(ab[0], ab[1]));
    tau.set_value(ab, v);
  }
  return tau;
}

/// Re-expresses a V-valued cochain with values in `sub` in sub's coordinates.
inline std::optional<Cochain> restrict_values(const Cochain& c, const Subspace& sub) {
  Cochain out(c.degree(), c.algebra_dim(), sub.dim());
  for (const auto& t : index_tuples(c.algebra_dim(), c.degree())) {
    auto coords = sub.coordinates(c.value(t));
    if (!coords) return std::nullopt;
    out.set_value(t, *coords);
  }
  return out;
}

/// Inverse of restrict_values.
inline Cochain extend_values(const Cochain& c, const Subspace& sub) {
  Cochain out(c.degree(), c.algebra_dim(), sub.ambient_dim());
  for (const auto& t : index_tuples(c.algebra_dim(), c.degree()))
    out.set_value(t, sub.from_coordinates(c.value(t)));
  return out;
}

struct ObstructionClass {
  Cochain tau;            // V-valued
  Cochain tau_invariant;  // in coordinates of V^h
  Vector h2_class;        // coordinates of [tau] in H^2(g, V^h)
  bool class_vanishes() const { return is_zero(h2_class); }
  bool vanishes() const { return tau.is_zero(); }
};

/// The obstruction cocycle of m and its class in H^2(g, V^h).
inline ObstructionClass tau_cocycle(const HamiltonianAnalysis& an, const MomentumMap& m) {
  const LieAlgebra& g = m.source();
  Cochain tau = tau_values(an, m);
  auto invariant = restrict_values(tau, an.V_h());
  detail::ensure(invariant.has_value(), "tau takes values in V^h");
  const ModuleAction gmod = g_module(an, m.zeta);
  if (g.dim() >= 3) detail::ensure(differential(gmod, tau).is_zero(), "d_g tau = 0");
  detail::ensure(tau == differential(gmod, Cochain::from_linear_map(m.J)) +
                            pullback_cocycle(an, m.zeta),
                 "tau = d_g J + omega_g");
  const ModuleAction trivial = ModuleAction::trivial(g, an.V_h().dim());
  Vector h2 = cohomology(trivial, 2).class_of(*invariant);
  return {std::move(tau), std::move(*invariant), std::move(h2)};
}

/// A Lie algebra extension 0 -> K -> total -> g -> 0 in fixed coordinates:
/// kernel basis first, then the g basis.
struct ExtensionPresentation {
  LieAlgebra total;
  Matrix kernel_injection;  // N x k
  Matrix projection;        // r x N
  Matrix section;           // N x r
  Matrix kernel_basis;      // dim V x k: kernel coordinates as vectors of V

  std::size_t kernel_dim() const noexcept { return kernel_injection.cols(); }
  std::size_t base_dim() const noexcept { return projection.rows(); }
};

namespace detail {

inline ExtensionPresentation split_coordinates(LieAlgebra total, std::size_t k, std::size_t r,
                                               Matrix kernel_basis) {
  const std::size_t n = k + r;
  Matrix inj(n, k), proj(r, n), sec(n, r);
  for (std::size_t i = 0; i < k; ++i) inj(i, i) = 1;
  for (std::size_t a = 0; a < r; ++a) {
    proj(a, k + a) = 1;
    sec(k + a, a) = 1;
  }
  return {std::move(total), std::move(inj), std::move(proj), std::move(sec),
          std::move(kernel_basis)};
}

}  // namespace detail

/// Checks the extension axioms against the base algebra g.
inline bool is_extension_of(const ExtensionPresentation& e, const LieAlgebra& g) {
  const std::size_t n = e.total.dim();
  if (e.projection.rows() != g.dim() || e.projection.cols() != n) return false;
  if (!(e.projection * e.kernel_injection).is_zero()) return false;
  if (!(e.projection * e.section == Matrix::identity(g.dim()))) return false;
  if (!preserves_brackets(e.projection, e.total, g)) return false;
  const Subspace kernel = Subspace::column_space(e.kernel_injection);
  if (kernel.dim() != e.kernel_dim() || kernel.dim() + g.dim() != n) return false;
  for (std::size_t i = 0; i < kernel.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!kernel.contains(e.total.bracket(kernel.basis_vector(i), unit<Rational>(n, j))))
        return false;
  return true;
}

inline bool is_central(const ExtensionPresentation& e) {
  const std::size_t n = e.total.dim();
  for (std::size_t i = 0; i < e.kernel_dim(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(e.total.bracket(e.kernel_injection.column(i), unit<Rational>(n, j))))
        return false;
  return true;
}

/// Whether phi: e1.total -> e2.total is an isomorphism of extensions
/// (bracket preserving, invertible, identity on kernels, compatible with projections).
inline bool is_equivalence(const ExtensionPresentation& e1, const ExtensionPresentation& e2,
                           const Matrix& phi) {
  if (phi.rows() != e2.total.dim() || phi.cols() != e1.total.dim()) return false;
  if (!inverse(phi)) return false;
  if (!preserves_brackets(phi, e1.total, e2.total)) return false;
  if (!(phi * e1.kernel_injection == e2.kernel_injection)) return false;
  return e2.projection * phi == e1.projection;
}

/// V^h x_tau g with bracket [(v,X),(w,Y)] = (tau(X,Y), [X,Y]).
inline ExtensionPresentation build_central_extension(const HamiltonianAnalysis& an,
                                                     const MomentumMap& m) {
  const ObstructionClass obs = tau_cocycle(an, m);
  const LieAlgebra& g = m.source();
  const std::size_t k = an.V_h().dim();
  const std::size_t r = g.dim();
  const std::size_t n = k + r;
  std::vector<Rational> c(n * n * n);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      const Vector t = obs.tau_invariant.value({a, b});
      for (std::size_t i = 0; i < k; ++i) c[((k + a) * n + (k + b)) * n + i] = t[i];
      for (std::size_t d = 0; d < r; ++d) c[((k + a) * n + (k + b)) * n + k + d] = g.constant(a, b, d);
    }
  auto ext = detail::split_coordinates(LieAlgebra::validated(n, std::move(c)), k, r, an.V_h().basis());
  detail::ensure(is_central(ext) && is_extension_of(ext, g), "central extension axioms");
  return ext;
}

/// (z, X) -> (z + J(X), X) from V^h x_tau g into V_omega x|_{omega_g} g, in
/// the coordinates of the two presentations.
inline Matrix central_into_abelian(const HamiltonianAnalysis& an, const MomentumMap& m) {
  const Subspace& Vh = an.V_h();
  const Subspace& Vw = an.V_omega();
  const std::size_t k = Vh.dim(), kw = Vw.dim(), r = m.source_dim();
  Matrix phi(kw + r, k + r);
  for (std::size_t i = 0; i < k; ++i) {
    const Vector c = *Vw.coordinates(Vh.basis_vector(i));
    for (std::size_t j = 0; j < kw; ++j) phi(j, i) = c[j];
  }
  for (std::size_t a = 0; a < r; ++a) {
    auto c = Vw.coordinates(m.value(a));
    detail::ensure(c.has_value(), "momentum values are admissible");
    for (std::size_t j = 0; j < kw; ++j) phi(j, k + a) = (*c)[j];
    phi(kw + a, k + a) = 1;
  }
  return phi;
}

/// V_omega x|_{omega_g} g with [(v,X),(w,Y)] = (X.w - Y.v + omega_g(X,Y), [X,Y]).
inline ExtensionPresentation build_abelian_extension(const HamiltonianAnalysis& an,
                                                     const AlgebraHom& zeta) {
  const Cochain omega_g = pullback_cocycle(an, zeta);
  const ModuleAction gmod = g_module(an, zeta);
  const LieAlgebra& g = zeta.source();
  const Subspace& Vw = an.V_omega();
  const std::size_t k = Vw.dim(), r = g.dim(), n = k + r;
  std::vector<Rational> c(n * n * n);
  auto put = [&](std::size_t i, std::size_t j, std::size_t l, const Rational& x) {
    c[(i * n + j) * n + l] = x;
  };
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t j = 0; j < k; ++j) {
      auto w = Vw.coordinates(gmod.action(a) * Vw.basis_vector(j));
      detail::ensure(w.has_value(), "V_omega is a g-submodule");
      for (std::size_t l = 0; l < k; ++l) {
        put(k + a, j, l, (*w)[l]);
        put(j, k + a, l, -(*w)[l]);
      }
    }
    for (std::size_t b = 0; b < r; ++b) {
      auto w = Vw.coordinates(omega_g.value({a, b}));
      detail::ensure(w.has_value(), "omega_g takes values in V_omega");
      for (std::size_t l = 0; l < k; ++l) put(k + a, k + b, l, (*w)[l]);
      for (std::size_t d = 0; d < r; ++d) put(k + a, k + b, k + d, g.constant(a, b, d));
    }
  }
  auto ab = detail::split_coordinates(LieAlgebra::validated(n, std::move(c)), k, r, Vw.basis());
  detail::ensure(is_extension_of(ab, g), "abelian extension axioms");

  const MomentumSolution sol = solve_momentum(an, zeta);
  const ExtensionPresentation cen = build_central_extension(an, sol.map);
  detail::ensure(preserves_brackets(central_into_abelian(an, sol.map), cen.total, ab.total),
                 "central extension embeds into the abelian extension");
  return ab;
}

struct MomentumEquivalences {
  bool homomorphism = false;  // {J X, J Y} = J[X,Y] for the Poisson bracket
  bool equivariant = false;   // X.J(Y) = J([X,Y])
  bool tau_zero = false;      // tau_J = 0
  bool section_hom = false;   // X -> (J X, X) is a hom into the pulled-back central extension
  bool all_agree() const {
    return homomorphism == equivariant && equivariant == tau_zero && tau_zero == section_hom;
  }
};

/// Evaluates the four equivalent conditions independently.
inline MomentumEquivalences check_equivalences(const HamiltonianAnalysis& an, const MomentumMap& m) {
  const LieAlgebra& g = m.source();
  const std::size_t r = g.dim();
  const ModuleAction gmod = g_module(an, m.zeta);
  MomentumEquivalences e{true, true, true, true};
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      const Vector j_ab = m.J * g.bracket_basis(a, b);
      if (a < b && poisson_bracket(an, m.value(a), m.value(b)) != j_ab) e.homomorphism = false;
      if (gmod.action(a) * m.value(b) != j_ab) e.equivariant = false;
      // In {(v,X) : d_h v = i_zeta(X) omega} the bracket is (-omega(zeta X, zeta Y), [X,Y]).
      if (a < b &&
          negated(an.omega().evaluate({m.zeta.image(a), m.zeta.image(b)})) != j_ab)
        e.section_hom = false;
    }
  e.tau_zero = tau_values(an, m).is_zero();
  return e;
}

struct Equivariantization {
  bool success = false;
  Matrix shift;                       // c: g -> V^h (as V-valued matrix) with tau_J = d_g c
  std::optional<MomentumMap> equivariant;  // J - c
  Vector obstruction;                 // H^2 coordinates of [tau_J]
};

/// Looks for c in Hom(g, V^h) with tau_{J - c} = 0.
inline Equivariantization equivariantize(const HamiltonianAnalysis& an, const MomentumMap& m) {
  const ObstructionClass obs = tau_cocycle(an, m);
  const LieAlgebra& g = m.source();
  const std::size_t k = an.V_h().dim();
  const ModuleAction trivial = ModuleAction::trivial(g, k);
  Equivariantization out;
  out.obstruction = obs.h2_class;
  auto sol = solve_affine(differential_matrix(trivial, 1), obs.tau_invariant.coords());
  if (!sol) return out;
  const Cochain c_inv = Cochain::from_coordinates(1, g.dim(), k, sol->particular);
  Matrix shift(an.module().dim(), g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a)
    shift.set_column(a, an.V_h().from_coordinates(c_inv.value({a})));
  MomentumMap fixed = make_momentum_map(an, m.zeta, m.J - shift);
  detail::ensure(tau_values(an, fixed).is_zero(), "tau_{J-c} = 0");
  const MomentumEquivalences eq = check_equivalences(an, fixed);
  detail::ensure(eq.homomorphism && eq.equivariant && eq.tau_zero && eq.section_hom,
                 "equivariant momentum map satisfies all four conditions");
  out.success = true;
  out.shift = std::move(shift);
  out.equivariant = std::move(fixed);
  return out;
}

/// J^(v, X) = J(X) + v on V^h x_tau g, as a dim V x (k + r) matrix.
inline Matrix hat_momentum(const HamiltonianAnalysis& an, const MomentumMap& m) {
  const std::size_t k = an.V_h().dim(), r = m.source_dim();
  Matrix jhat = hstack<Rational>({an.V_h().basis(), m.J}, an.module().dim());
  // d_h J^(v,X) = i_zeta(X) omega
  for (std::size_t i = 0; i < k; ++i) detail::ensure(is_zero(an.d0() * jhat.column(i)), "d_h v = 0");
  for (std::size_t a = 0; a < r; ++a)
    detail::ensure(an.d0() * jhat.column(k + a) == an.contraction() * m.zeta.image(a),
                   "d_h J^ = i omega");
  // X.J^(u) = J^([(0,X), u]) in the central extension
  const ExtensionPresentation cen = build_central_extension(an, m);
  const ModuleAction gmod = g_module(an, m.zeta);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t u = 0; u < k + r; ++u)
      detail::ensure(gmod.action(a) * jhat.column(u) == jhat * cen.total.bracket_basis(k + a, u),
                     "J^ is equivariant");
  return jhat;
}

/// For omega = d_h alpha: f_J = J + zeta^* alpha, with tau_J = d_g f_J. Throws NotPrimitive.
inline Matrix coboundary_case(const HamiltonianAnalysis& an, const MomentumMap& m,
                              const Cochain& alpha) {
  if (alpha.degree() != 1 || !(differential(an.module(), alpha) == an.omega()))
    throw Error(ErrorKind::NotPrimitive, "d_h alpha != omega");
  const std::size_t r = m.source_dim();
  Matrix f = m.J;
  for (std::size_t a = 0; a < r; ++a)
    f.set_column(a, add(m.value(a), alpha.evaluate({m.zeta.image(a)})));
  const ModuleAction gmod = g_module(an, m.zeta);
  detail::ensure(tau_values(an, m) == differential(gmod, Cochain::from_linear_map(f)),
                 "tau_J = d_g f_J");
  for (std::size_t a = 0; a < r; ++a)
    detail::ensure(lie_derivative(an.module(), m.zeta.image(a), alpha) ==
                       an.d_h(f.column(a)),
                   "L_zeta(X) alpha = d_h f_J(X)");
  return f;
}

struct Cartan2Report {
  bool omega_closed = false;
  bool momentum_equation = false;
  bool omega_invariant = false;
  bool J_equivariant = false;
  bool passed() const {
    return omega_closed && momentum_equation && omega_invariant && J_equivariant;
  }
};

/// Whether omega + J is closed in the degree-2 Cartan complex.
inline Cartan2Report cartan2_check(const HamiltonianAnalysis& an, const AlgebraHom& zeta,
                                   const Matrix& J) {
  if (J.rows() != an.module().dim() || J.cols() != zeta.source().dim())
    throw Error(ErrorKind::DimensionMismatch, "cartan2_check: J size");
  const LieAlgebra& g = zeta.source();
  const ModuleAction gmod = g_module(an, zeta);
  Cartan2Report rep;
  rep.omega_closed = an.d_omega().is_zero();
  rep.momentum_equation = rep.omega_invariant = rep.J_equivariant = true;
  for (std::size_t a = 0; a < g.dim(); ++a) {
    if (an.contraction() * zeta.image(a) != an.d0() * J.column(a)) rep.momentum_equation = false;
    if (!lie_derivative(an.module(), zeta.image(a), an.omega()).is_zero())
      rep.omega_invariant = false;
    for (std::size_t b = 0; b < g.dim(); ++b)
      if (gmod.action(a) * J.column(b) != J * g.bracket_basis(a, b)) rep.J_equivariant = false;
  }
  return rep;
}

struct BaerProduct {
  ExtensionPresentation extension;  // V_omega-kernel extension of g from (V_omega x| cen) / antidiagonal
  ExtensionPresentation abelian;    // build_abelian_extension output
  Matrix witness;                   // extension -> abelian, (v, X) -> (v + f(X), X)
  Matrix witness_cochain;           // f: g -> V_omega as a dim V x r matrix
  bool equivalent = false;
};

/// Baer product of a central extension of g by V^h with the split extension
/// V_omega x| g. Throws KernelMismatch when cen is not an extension of g by V^h.
inline BaerProduct baer_product_lie(const HamiltonianAnalysis& an, const MomentumMap& m,
                                    const ExtensionPresentation& cen) {
  const LieAlgebra& g = m.source();
  const Subspace& Vh = an.V_h();
  const Subspace& Vw = an.V_omega();
  const std::size_t k = Vh.dim(), kw = Vw.dim(), r = g.dim();
  if (cen.kernel_dim() != k || cen.total.dim() != k + r || !is_extension_of(cen, g) ||
      !is_central(cen) || cen.kernel_basis.rows() != an.module().dim() ||
      Subspace::column_space(cen.kernel_basis) != Vh)
    throw Error(ErrorKind::KernelMismatch, "expected a central extension of g by V^h");

  // V_omega x| cen, with cen acting through its projection to g.
  const ModuleAction gmod = g_module(an, m.zeta);
  const std::size_t nc = k + r, n = kw + nc;
  std::vector<Rational> c(n * n * n);
  auto put = [&](std::size_t i, std::size_t j, std::size_t l, const Rational& x) {
    c[(i * n + j) * n + l] = x;
  };
  for (std::size_t u = 0; u < nc; ++u) {
    const Matrix rho = gmod.action_of(cen.projection.column(u));
    for (std::size_t j = 0; j < kw; ++j) {
      const Vector w = *Vw.coordinates(rho * Vw.basis_vector(j));
      for (std::size_t l = 0; l < kw; ++l) {
        put(kw + u, j, l, w[l]);
        put(j, kw + u, l, -w[l]);
      }
    }
    for (std::size_t v = 0; v < nc; ++v)
      for (std::size_t l = 0; l < nc; ++l) put(kw + u, kw + v, kw + l, cen.total.constant(u, v, l));
  }
  const LieAlgebra semidirect = LieAlgebra::validated(n, std::move(c));

  // Antidiagonal {(z, -z) : z in V^h}.
  std::vector<Vector> anti;
  for (std::size_t i = 0; i < k; ++i) {
    Vector d = concat(*Vw.coordinates(cen.kernel_basis.column(i)),
                      negated(cen.kernel_injection.column(i)));
    anti.push_back(std::move(d));
  }
  const QuotientAlgebra quotient = quotient_algebra(semidirect, Subspace::span(n, anti));

  // Coordinates (V_omega basis, then the images of cen's section).
  Matrix p(quotient.algebra.dim(), kw + r);
  for (std::size_t j = 0; j < kw; ++j) p.set_column(j, quotient.projection(unit<Rational>(n, j)));
  for (std::size_t a = 0; a < r; ++a)
    p.set_column(kw + a, quotient.projection(concat(Vector(kw), cen.section.column(a))));
  BaerProduct out{detail::split_coordinates(change_basis(quotient.algebra, p), kw, r, Vw.basis()),
                  build_abelian_extension(an, m.zeta), Matrix(), Matrix(), false};
  detail::ensure(is_extension_of(out.extension, g), "Baer product is an extension of g");

  auto witness_for = [&](const Matrix& f) {
    Matrix phi = Matrix::identity(kw + r);
    for (std::size_t a = 0; a < r; ++a) {
      const Vector w = *Vw.coordinates(f.column(a));
      for (std::size_t j = 0; j < kw; ++j) phi(j, kw + a) = w[j];
    }
    return phi;
  };

  // The momentum map itself is the expected witness; otherwise solve for one.
  std::optional<Matrix> f;
  if (is_equivalence(out.extension, out.abelian, witness_for(m.J))) {
    f = m.J;
  } else {
    // Cocycles of both extensions relative to (0, X): c_baer - omega_g = d_g f.
    const Cochain cb = [&] {
      Cochain cc(2, r, an.module().dim());
      for (const auto& ab : index_tuples(r, 2)) {
        Vector b = out.extension.total.bracket_basis(kw + ab[0], kw + ab[1]);
        cc.set_value(ab, Vw.from_coordinates(slice(b, 0, kw)));
      }
      return cc;
    }();
    const Cochain diff = cb - pullback_cocycle(an, m.zeta);
    // Unknowns: coordinates of f(e_a) in V_omega.
    Matrix d1 = differential_matrix(gmod, 1);
    Matrix embed(r * an.module().dim(), r * kw);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t i = 0; i < an.module().dim(); ++i)
        for (std::size_t j = 0; j < kw; ++j) embed(a * an.module().dim() + i, a * kw + j) = Vw.basis()(i, j);
    if (auto sol = solve_affine(d1 * embed, diff.coords())) {
      Matrix fm(an.module().dim(), r);
      for (std::size_t a = 0; a < r; ++a)
        fm.set_column(a, Vw.from_coordinates(slice(sol->particular, a * kw, kw)));
      if (is_equivalence(out.extension, out.abelian, witness_for(fm))) f = fm;
    }
  }
  if (f) {
    out.witness = witness_for(*f);
    out.witness_cochain = *f;
    out.equivalent = true;
  }
  return out;
}

}  // namespace hamflux
