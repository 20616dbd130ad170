#pragma once

#include <string>
#include <utility>

#include "hamflux/momentum.hpp"

namespace hamflux {

/// A group element given by its adjoint matrix on g and its operator on V.
struct GroupElementData {
  Matrix Ad;
  Matrix rhoV;
  std::string label;
};

/// Checks Ad is an automorphism of g, rhoV is invertible, the intertwining
/// rhoV dρ(X) rhoV^-1 = dρ(Ad X) and the invariance rhoV ω_g(X,Y) = ω_g(Ad X, Ad Y).
inline GroupElementData validate_group_element(const HamiltonianAnalysis& an,
                                               const AlgebraHom& zeta, Matrix Ad, Matrix rhoV,
                                               std::string label = {}) {
  const LieAlgebra& g = zeta.source();
  const std::size_t r = g.dim(), m = an.module().dim();
  if (Ad.rows() != r || Ad.cols() != r || rhoV.rows() != m || rhoV.cols() != m)
    throw Error(ErrorKind::DimensionMismatch, label + ": Ad must be dim g square, rhoV dim V square");
  if (!inverse(Ad) || !preserves_brackets(Ad, g, g))
    throw Error(ErrorKind::NotAutomorphism, label + ": Ad is not an automorphism of g");
  const auto rho_inv = inverse(rhoV);
  if (!rho_inv) throw Error(ErrorKind::NotInvertible, label + ": rhoV is singular");
  const ModuleAction gmod = g_module(an, zeta);
  for (std::size_t a = 0; a < r; ++a)
    if (rhoV * gmod.action(a) * *rho_inv != gmod.action_of(Ad.column(a)))
      throw Error(ErrorKind::IntertwiningViolation,
                  label + ": X = e_" + std::to_string(a));
  const Cochain omega_g = pullback_cocycle(an, zeta);
  for (const auto& ab : index_tuples(r, 2))
    if (rhoV * omega_g.value(ab) != omega_g.evaluate({Ad.column(ab[0]), Ad.column(ab[1])}))
      throw Error(ErrorKind::CocycleInvarianceViolation,
                  label + ": (X, Y) = (e_" + std::to_string(ab[0]) + ", e_" +
                      std::to_string(ab[1]) + ")");
  return {std::move(Ad), std::move(rhoV), std::move(label)};
}

inline GroupElementData identity_element(const HamiltonianAnalysis& an, const AlgebraHom& zeta) {
  return {Matrix::identity(zeta.source().dim()), Matrix::identity(an.module().dim()), "e"};
}

/// exp(t n) = sum t^i n^i / i! for nilpotent n. Throws NotNilpotent.
inline Matrix exp_nilpotent(const Matrix& n, const Rational& t) {
  if (n.rows() != n.cols()) throw Error(ErrorKind::DimensionMismatch, "exp_nilpotent: square matrix");
  const std::size_t d = n.rows();
  Matrix out = Matrix::identity(d);
  Matrix term = Matrix::identity(d);
  for (std::size_t i = 1; i <= d; ++i) {
    term = (t / Rational(static_cast<long>(i))) * (term * n);
    if (term.is_zero()) return out;
    out = out + term;
  }
  throw Error(ErrorKind::NotNilpotent, "matrix is not nilpotent");
}

inline GroupElementData compose(const HamiltonianAnalysis& an, const AlgebraHom& zeta,
                                const GroupElementData& g1, const GroupElementData& g2) {
  return validate_group_element(an, zeta, g1.Ad * g2.Ad, g1.rhoV * g2.rhoV,
                                g1.label + "*" + g2.label);
}

inline GroupElementData invert(const HamiltonianAnalysis& an, const AlgebraHom& zeta,
                               const GroupElementData& g) {
  auto ad = inverse(g.Ad);
  auto rho = inverse(g.rhoV);
  if (!ad || !rho) throw Error(ErrorKind::NotInvertible, g.label + " is not invertible");
  return validate_group_element(an, zeta, *ad, *rho, g.label + "^-1");
}

/// κ(g)(X) = rhoV J(Ad^-1 X) - J(X), as a dim V x dim g matrix. Throws
/// ValueOutsideInvariants when a value leaves V^h.
inline Matrix kappa(const HamiltonianAnalysis& an, const GroupElementData& g, const MomentumMap& m) {
  const auto ad_inv = inverse(g.Ad);
  if (!ad_inv) throw Error(ErrorKind::NotInvertible, g.label + ": Ad is singular");
  Matrix k = g.rhoV * m.J * *ad_inv - m.J;
  for (std::size_t a = 0; a < k.cols(); ++a)
    if (!an.V_h().contains(k.column(a)))
      throw Error(ErrorKind::ValueOutsideInvariants,
                  g.label + ": kappa(e_" + std::to_string(a) + ") = " + to_string(k.column(a)));
  return k;
}

/// κ(g1 g2) = g1.κ(g2) + κ(g1) with (g.c)(Y) = rhoV c(Ad^-1 Y).
inline bool kappa_cocycle_check(const HamiltonianAnalysis& an, const AlgebraHom& zeta,
                                const GroupElementData& g1, const GroupElementData& g2,
                                const MomentumMap& m) {
  const GroupElementData g12 = compose(an, zeta, g1, g2);
  const Matrix lhs = kappa(an, g12, m);
  const Matrix rhs = g1.rhoV * kappa(an, g2, m) * *inverse(g1.Ad) + kappa(an, g1, m);
  return lhs == rhs;
}

/// Âd(g)(v, X) = (v + κ(g)(Ad X), Ad X) on the central extension presentation
/// (V^h coordinates first, then g).
inline Matrix hat_adjoint(const HamiltonianAnalysis& an, const GroupElementData& g,
                          const MomentumMap& m, const ExtensionPresentation& cen) {
  const Subspace& Vh = an.V_h();
  const std::size_t k = Vh.dim(), r = m.source_dim();
  if (cen.kernel_dim() != k || cen.total.dim() != k + r ||
      !(cen.kernel_basis == Vh.basis()))
    throw Error(ErrorKind::KernelMismatch, "expected the central extension V^h x_tau g");
  const Matrix kap = kappa(an, g, m) * g.Ad;
  Matrix out(k + r, k + r);
  for (std::size_t i = 0; i < k; ++i) out(i, i) = 1;
  for (std::size_t a = 0; a < r; ++a) {
    const Vector z = *Vh.coordinates(kap.column(a));
    for (std::size_t i = 0; i < k; ++i) out(i, k + a) = z[i];
    for (std::size_t b = 0; b < r; ++b) out(k + b, k + a) = g.Ad(b, a);
  }
  if (!preserves_brackets(out, cen.total, cen.total) || !inverse(out))
    throw Error(ErrorKind::NotAutomorphism, g.label + ": hat Ad is not an automorphism");
  const Matrix jhat = hat_momentum(an, m);
  if (jhat * out != g.rhoV * jhat)
    throw Error(ErrorKind::IntertwiningViolation, g.label + ": hat J is not equivariant");
  return out;
}

/// (g * α)(X) = α(Ad^-1 X) - κ(g)(X) for α: g -> V^h given as a dim V x dim g matrix.
inline Matrix affine_action(const HamiltonianAnalysis& an, const GroupElementData& g,
                            const MomentumMap& m, const Matrix& alpha) {
  if (alpha.rows() != an.module().dim() || alpha.cols() != m.source_dim())
    throw Error(ErrorKind::DimensionMismatch, "affine_action: alpha size");
  for (std::size_t a = 0; a < alpha.cols(); ++a)
    if (!an.V_h().contains(alpha.column(a)))
      throw Error(ErrorKind::ValueOutsideInvariants, "alpha must take values in V^h");
  return alpha * *inverse(g.Ad) - kappa(an, g, m);
}

}  // namespace hamflux
