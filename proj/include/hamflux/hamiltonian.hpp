#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamflux/cochain.hpp"

namespace hamflux {

/// Linear maps xi -> i_xi c for every basis direction, as a matrix whose
/// column k is the storage vector of i_{e_k} c.
inline Matrix contraction_matrix(const Cochain& c) {
  const std::size_t n = c.algebra_dim();
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < n; ++k)
    cols.push_back(contract(unit<Rational>(n, k), c).coords());
  return Matrix::from_columns(detail::binomial(n, c.degree() - 1) * c.module_dim(), cols);
}

inline Matrix lie_derivative_matrix(const ModuleAction& mod, const Cochain& c) {
  const std::size_t n = mod.algebra_dim();
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < n; ++k)
    cols.push_back(lie_derivative(mod, unit<Rational>(n, k), c).coords());
  return Matrix::from_columns(c.size(), cols);
}

/// An element (v, xi) of the central extension of ham(h, omega): d_h v = i_xi omega.
struct HatHamElement {
  Vector v;
  Vector xi;
  friend bool operator==(const HatHamElement&, const HatHamElement&) = default;
};

/// A pair (v, xi) of V x h, used by the abelian and central brackets on V_omega x sp.
struct ModulePair {
  Vector v;
  Vector xi;
  friend bool operator==(const ModulePair&, const ModulePair&) = default;
};

/// Everything derived from a module V of h and a 2-cochain omega: the
/// symplectic, hamiltonian and radical subalgebras, the normalizer h_omega,
/// the invariants V^h and the admissible vectors V_omega.
class HamiltonianAnalysis {
 public:
  HamiltonianAnalysis(ModuleAction module, Cochain omega)
      : module_(std::move(module)), omega_(std::move(omega)) {
    const std::size_t n = module_.algebra_dim();
    const std::size_t m = module_.dim();
    if (omega_.degree() != 2 || omega_.algebra_dim() != n || omega_.module_dim() != m)
      throw Error(ErrorKind::DimensionMismatch, "omega must be a 2-cochain on the module");

    d_omega_ = differential(module_, omega_);
    contraction_ = contraction_matrix(omega_);        // xi -> i_xi omega
    closedness_ = contraction_matrix(d_omega_);       // xi -> i_xi d omega
    d0_ = differential_matrix(module_, 0);            // v -> d_h v
    const Matrix lie = lie_derivative_matrix(module_, omega_);

    sp_ = kernel_basis(vstack<Rational>({lie, closedness_}, n));
    rad_ = kernel_basis(vstack<Rational>({contraction_, closedness_}, n));
    V_h_ = kernel_basis(d0_);

    // (v, xi) with d_h v = i_xi omega and i_xi d omega = 0.
    const std::size_t c1 = contraction_.rows();
    const std::size_t c3 = closedness_.rows();
    Matrix pairs = vstack<Rational>(
        {hstack<Rational>({Matrix(c3, m), closedness_}, c3),
         hstack<Rational>({d0_, Rational(-1) * contraction_}, c1)},
        m + n);
    hat_ham_ = kernel_basis(pairs);
    std::vector<Vector> vs, xis;
    for (const auto& w : hat_ham_.basis_vectors()) {
      vs.push_back(slice(w, 0, m));
      xis.push_back(slice(w, m, n));
    }
    V_omega_ = Subspace::span(m, vs);
    ham_ = Subspace::span(n, xis);

    // Normalizer of rad inside ker(i_. d omega).
    const QuotientMap rad_q = quotient_map(n, rad_);
    std::vector<Matrix> blocks{closedness_};
    for (const auto& r : rad_.basis_vectors())
      blocks.push_back(rad_q.map * module_.algebra().ad(r));
    h_omega_ = kernel_basis(vstack<Rational>(blocks, n));

    lift_solver_ = LinearSolver(vstack<Rational>({contraction_, closedness_}, n));
    h1_.emplace(cohomology(module_, 1));
  }

  const ModuleAction& module() const noexcept { return module_; }
  const LieAlgebra& algebra() const noexcept { return module_.algebra(); }
  const Cochain& omega() const noexcept { return omega_; }
  const Cochain& d_omega() const noexcept { return d_omega_; }
  const Subspace& sp() const noexcept { return sp_; }
  const Subspace& ham() const noexcept { return ham_; }
  const Subspace& rad() const noexcept { return rad_; }
  const Subspace& h_omega() const noexcept { return h_omega_; }
  const Subspace& V_h() const noexcept { return V_h_; }
  const Subspace& V_omega() const noexcept { return V_omega_; }
  /// The central extension of ham, as a subspace of V + h (v coordinates first).
  const Subspace& hat_ham() const noexcept { return hat_ham_; }
  const CohomologySpace& h1() const { return *h1_; }

  /// Column k: i_{e_k} omega.
  const Matrix& contraction() const noexcept { return contraction_; }
  /// Column k: i_{e_k} d_h omega.
  const Matrix& closedness() const noexcept { return closedness_; }
  /// v -> d_h v.
  const Matrix& d0() const noexcept { return d0_; }

  Cochain i_omega(const Vector& xi) const {
    return Cochain::from_coordinates(1, algebra().dim(), module_.dim(), contraction_ * xi);
  }
  Cochain d_h(const Vector& v) const {
    return Cochain::from_coordinates(1, algebra().dim(), module_.dim(), d0_ * v);
  }

  /// Canonical xi with d_h v = i_xi omega and i_xi d omega = 0, if any.
  std::optional<Vector> try_lift(const Vector& v) const {
    if (v.size() != module_.dim()) throw Error(ErrorKind::DimensionMismatch, "lift: vector size");
    return lift_solver_.solve(concat(d0_ * v, Vector(closedness_.rows())));
  }

 private:
  ModuleAction module_;
  Cochain omega_;
  Cochain d_omega_;
  Matrix contraction_;
  Matrix closedness_;
  Matrix d0_;
  Subspace sp_, ham_, rad_, h_omega_, V_h_, V_omega_, hat_ham_;
  LinearSolver lift_solver_;
  std::optional<CohomologySpace> h1_;
};

inline HamiltonianAnalysis analyze(const ModuleAction& mod, const Cochain& omega) {
  return HamiltonianAnalysis(mod, omega);
}

/// sp through its second description {xi : d_h(i_xi omega) = 0, i_xi d omega = 0}.
inline Subspace symplectic_via_closed_contraction(const HamiltonianAnalysis& an) {
  const std::size_t n = an.algebra().dim();
  Matrix d1 = differential_matrix(an.module(), 1);
  return kernel_basis(vstack<Rational>({d1 * an.contraction(), an.closedness()}, n));
}

/// xi in ham with d_h v = i_xi omega; unique modulo rad. Throws NotAdmissible.
inline Vector hamiltonian_lift(const HamiltonianAnalysis& an, const Vector& v) {
  auto xi = an.try_lift(v);
  if (!xi) throw Error(ErrorKind::NotAdmissible, "no hamiltonian lift for " + to_string(v));
  return *xi;
}

/// {v1, v2} = -omega(xi1, xi2) for hamiltonian lifts xi_j of v_j.
inline Vector poisson_bracket(const HamiltonianAnalysis& an, const Vector& v1, const Vector& v2) {
  const Vector xi1 = hamiltonian_lift(an, v1);
  const Vector xi2 = hamiltonian_lift(an, v2);
  return negated(an.omega().evaluate({xi1, xi2}));
}

/// Coordinates of [i_xi omega] in H^1(h, V). Throws NotSymplectic.
inline Vector flux_class(const HamiltonianAnalysis& an, const Vector& xi) {
  if (!an.sp().contains(xi)) throw Error(ErrorKind::NotSymplectic, to_string(xi));
  return an.h1().class_of(an.i_omega(xi));
}

namespace detail {

inline void require_hat_ham(const HamiltonianAnalysis& an, const HatHamElement& a) {
  if (a.v.size() != an.module().dim() || a.xi.size() != an.algebra().dim())
    throw Error(ErrorKind::DimensionMismatch, "hat ham element");
  if (an.d0() * a.v != an.contraction() * a.xi || !is_zero(an.closedness() * a.xi))
    throw Error(ErrorKind::InvariantViolation,
                "d_h v != i_xi omega for (" + to_string(a.v) + ", " + to_string(a.xi) + ")");
}

}  // namespace detail

/// [(v1,xi1),(v2,xi2)] = (-omega(xi1,xi2), [xi1,xi2]).
inline HatHamElement hat_ham_bracket(const HamiltonianAnalysis& an, const HatHamElement& a,
                                     const HatHamElement& b) {
  detail::require_hat_ham(an, a);
  detail::require_hat_ham(an, b);
  return {negated(an.omega().evaluate({a.xi, b.xi})), an.algebra().bracket(a.xi, b.xi)};
}

/// Bracket of the abelian extension V_omega x|_omega sp:
/// (xi1.v2 - xi2.v1 + omega(xi1,xi2), [xi1,xi2]).
inline ModulePair sp_abelian_bracket(const HamiltonianAnalysis& an, const ModulePair& a,
                                     const ModulePair& b) {
  for (const auto* x : {&a, &b}) {
    if (!an.sp().contains(x->xi)) throw Error(ErrorKind::NotSymplectic, to_string(x->xi));
    if (!an.V_omega().contains(x->v)) throw Error(ErrorKind::NotAdmissible, to_string(x->v));
  }
  const ModuleAction& mod = an.module();
  Vector v = sub(mod.act(a.xi, b.v), mod.act(b.xi, a.v));
  v = add(std::move(v), an.omega().evaluate({a.xi, b.xi}));
  return {std::move(v), an.algebra().bracket(a.xi, b.xi)};
}

/// Bracket of the central extension V_omega x_{-omega} sp with V_omega a trivial module.
inline ModulePair sp_central_bracket(const HamiltonianAnalysis& an, const ModulePair& a,
                                     const ModulePair& b) {
  for (const auto* x : {&a, &b}) {
    if (!an.sp().contains(x->xi)) throw Error(ErrorKind::NotSymplectic, to_string(x->xi));
    if (!an.V_omega().contains(x->v)) throw Error(ErrorKind::NotAdmissible, to_string(x->v));
  }
  return {negated(an.omega().evaluate({a.xi, b.xi})), an.algebra().bracket(a.xi, b.xi)};
}

/// Some xi in h_omega with i_xi omega = alpha. Throws NotInImage.
inline Vector oneform_preimage(const HamiltonianAnalysis& an, const Cochain& alpha) {
  const Subspace& h_om = an.h_omega();
  auto sol = solve_affine(an.contraction() * h_om.basis(), alpha.coords());
  if (!sol) throw Error(ErrorKind::NotInImage, "1-cochain is not i_xi omega for xi in h_omega");
  return h_om.from_coordinates(sol->particular);
}

/// [i_xi1 omega, i_xi2 omega] = i_[xi1,xi2] omega on C^1(h,V)_omega.
inline Cochain oneform_bracket(const HamiltonianAnalysis& an, const Cochain& a1,
                               const Cochain& a2) {
  const Vector xi1 = oneform_preimage(an, a1);
  const Vector xi2 = oneform_preimage(an, a2);
  return an.i_omega(an.algebra().bracket(xi1, xi2));
}

struct ExactnessReport {
  std::size_t sp = 0, ham = 0, rad = 0, h_omega = 0, V_h = 0, V_omega = 0;
  std::size_t d_V_omega = 0;       // dim d_h(V_omega)
  std::size_t oneforms_omega = 0;  // dim C^1(h,V)_omega
  std::vector<std::pair<std::string, bool>> checks;

  bool all_passed() const {
    for (const auto& [name, ok] : checks)
      if (!ok) return false;
    return true;
  }
};

/// Dimension bookkeeping for 0 -> rad -> ham -> d_h(V_omega) -> 0,
/// 0 -> rad -> h_omega -> C^1(h,V)_omega -> 0 and 0 -> V^h -> V_omega -> d_h(V_omega) -> 0.
inline ExactnessReport exactness_report(const HamiltonianAnalysis& an) {
  ExactnessReport r;
  r.sp = an.sp().dim();
  r.ham = an.ham().dim();
  r.rad = an.rad().dim();
  r.h_omega = an.h_omega().dim();
  r.V_h = an.V_h().dim();
  r.V_omega = an.V_omega().dim();
  const Subspace d_V = image(an.d0(), an.V_omega());
  const Subspace q_ham = image(an.contraction(), an.ham());
  const Subspace c1_omega = image(an.contraction(), an.h_omega());
  r.d_V_omega = d_V.dim();
  r.oneforms_omega = c1_omega.dim();
  r.checks = {
      {"q(ham) = d_h(V_omega)", q_ham == d_V},
      {"dim ham = dim rad + dim d_h(V_omega)", r.ham == r.rad + r.d_V_omega},
      {"dim V_omega = dim V^h + dim d_h(V_omega)", r.V_omega == r.V_h + r.d_V_omega},
      {"dim h_omega = dim rad + dim C^1_omega", r.h_omega == r.rad + r.oneforms_omega},
      {"rad <= ham <= sp <= h_omega",
       an.ham().contains(an.rad()) && an.sp().contains(an.ham()) &&
           an.h_omega().contains(an.sp())},
      {"V^h <= V_omega", an.V_omega().contains(an.V_h())},
      {"dim hat_ham = dim V^h + dim ham", an.hat_ham().dim() == r.V_h + r.ham},
  };
  return r;
}

}  // namespace hamflux
