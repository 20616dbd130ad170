#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hamflux/momentum.hpp"

namespace hamflux {

struct NoetherWitness {
  std::string label;
  Vector residual;
};

struct NoetherReport {
  bool hypothesis_ok = false;
  bool conclusion_ok = false;
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<NoetherWitness> witnesses;
};

namespace detail {

inline std::string basis_label(const char* name, std::size_t a) {
  return std::string(name) + std::to_string(a);
}

}  // namespace detail

/// For v in V^g with d_h v = i_ξ ω: ξ.J(X) = 0 for all X in g.
/// Throws HypothesisViolation naming the failed premise.
inline NoetherReport invariant_flow_check(const HamiltonianAnalysis& an, const MomentumMap& m,
                                          const Vector& v, const Vector& xi) {
  const std::size_t n = an.algebra().dim(), mdim = an.module().dim();
  if (v.size() != mdim || xi.size() != n)
    throw Error(ErrorKind::DimensionMismatch, "invariant_flow_check: vector sizes");
  if (an.d0() * v != an.contraction() * xi)
    throw Error(ErrorKind::HypothesisViolation, "d_h v != i_xi omega");
  const ModuleAction gmod = g_module(an, m.zeta);
  for (std::size_t a = 0; a < m.source_dim(); ++a) {
    const Vector r = gmod.action(a) * v;
    if (!is_zero(r))
      throw Error(ErrorKind::HypothesisViolation,
                  "v is not g-invariant: e_" + std::to_string(a) + ".v = " + to_string(r));
  }
  NoetherReport rep;
  rep.hypothesis_ok = true;
  rep.conclusion_ok = true;
  const Matrix rho = an.module().action_of(xi);
  for (std::size_t a = 0; a < m.source_dim(); ++a) {
    Vector r = rho * m.value(a);
    const bool ok = is_zero(r);
    rep.conclusion_ok = rep.conclusion_ok && ok;
    rep.checks.emplace_back("xi.J(" + detail::basis_label("X", a) + ") = 0", ok);
    rep.witnesses.push_back({detail::basis_label("X", a), std::move(r)});
  }
  return rep;
}

/// Two hamiltonian actions with J_2(g_2) ⊆ V^{g_1}: then J_1(g_1) ⊆ V^{g_2} and
/// [ζ_1 X_1, ζ_2 X_2] lies in rad(ω, d_h ω). Throws HypothesisViolation.
inline NoetherReport commuting_actions_check(const HamiltonianAnalysis& an, const MomentumMap& m1,
                                             const MomentumMap& m2) {
  const std::size_t r1 = m1.source_dim(), r2 = m2.source_dim();
  for (std::size_t a = 0; a < r1; ++a) {
    const Matrix rho1 = an.module().action_of(m1.zeta.image(a));
    for (std::size_t b = 0; b < r2; ++b) {
      const Vector r = rho1 * m2.value(b);
      if (!is_zero(r))
        throw Error(ErrorKind::HypothesisViolation,
                    "J_2 leaves V^{g_1}: zeta_1(X" + std::to_string(a) + ").J_2(Y" +
                        std::to_string(b) + ") = " + to_string(r));
    }
  }
  NoetherReport rep;
  rep.hypothesis_ok = true;
  bool values_ok = true, omega_ok = true, d_omega_ok = true;
  for (std::size_t a = 0; a < r1; ++a)
    for (std::size_t b = 0; b < r2; ++b) {
      const std::string pair = "(" + detail::basis_label("X", a) + "," + detail::basis_label("Y", b) + ")";
      Vector r = an.module().action_of(m2.zeta.image(b)) * m1.value(a);
      if (!is_zero(r)) values_ok = false;
      rep.witnesses.push_back({"zeta_2 J_1 " + pair, std::move(r)});
      const Vector br = an.algebra().bracket(m1.zeta.image(a), m2.zeta.image(b));
      Vector io = an.contraction() * br;
      Vector ido = an.closedness() * br;
      if (!is_zero(io)) omega_ok = false;
      if (!is_zero(ido)) d_omega_ok = false;
      rep.witnesses.push_back({"i omega " + pair, std::move(io)});
      rep.witnesses.push_back({"i d omega " + pair, std::move(ido)});
    }
  rep.checks.emplace_back("J_1 takes values in V^{g_2}", values_ok);
  rep.checks.emplace_back("i_[zeta_1 X, zeta_2 Y] omega = 0", omega_ok);
  rep.checks.emplace_back("i_[zeta_1 X, zeta_2 Y] d omega = 0", d_omega_ok);
  rep.conclusion_ok = values_ok && omega_ok && d_omega_ok;
  return rep;
}

}  // namespace hamflux
