#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hamflux/algebras.hpp"
#include "hamflux/hamiltonian.hpp"
#include "hamflux/momentum.hpp"

namespace hamflux {

/// Dimensions and facts an instance is known to satisfy.
struct ExpectedRecord {
  std::optional<std::size_t> sp, ham, rad, h_omega, V_h, V_omega, hat_ham;
  /// Poisson bracket on V_omega = V equals `v_bracket` (structure constants).
  bool poisson_equals_v_bracket = false;
  /// Poisson bracket equals the negative of `v_bracket`: v -> -v is an isomorphism.
  bool poisson_equals_negated_v_bracket = false;
};

struct InstanceBundle {
  std::string name;
  ModuleAction module;
  Cochain omega;
  std::optional<AlgebraHom> zeta;
  ExpectedRecord expected;
  std::optional<LieAlgebra> v_bracket;     // a Lie bracket on V the instance is built from
  std::optional<Cochain> shifted_omega;    // ω - d_h σ (associative example)
  std::optional<Matrix> section;           // σ: h -> V (associative example)
};

/// V = hat_h with the adjoint action factored through h = hat_h / z,
/// ω(q X, q Y) = -[X, Y]. Throws NotCentral.
inline InstanceBundle from_central_extension(const LieAlgebra& hat_h, const Subspace& z,
                                             std::string name = "central_extension") {
  const Subspace center = center_of(hat_h);
  if (z.ambient_dim() != hat_h.dim() || !center.contains(z))
    throw Error(ErrorKind::NotCentral, "subspace is not central");
  const QuotientAlgebra q = quotient_algebra(hat_h, z);
  const std::size_t r = q.algebra.dim(), n = hat_h.dim();
  std::vector<Matrix> action;
  for (std::size_t a = 0; a < r; ++a) action.push_back(hat_h.ad(q.projection.section.column(a)));
  ModuleAction mod = ModuleAction::validated(q.algebra, n, std::move(action));
  Cochain omega(2, r, n);
  for (const auto& ab : index_tuples(r, 2))
    omega.set_value(ab, negated(hat_h.bracket(q.projection.section.column(ab[0]),
                                              q.projection.section.column(ab[1]))));
  // ĥam ≅ ĥ ⊕ q(z(ĥ)): the lifts of central elements are central in h.
  const std::size_t qz = image(q.projection.map, center).dim();
  ExpectedRecord ex;
  ex.sp = ex.ham = ex.h_omega = r;
  ex.V_omega = n;
  ex.V_h = center.dim();
  ex.hat_ham = n + qz;
  ex.poisson_equals_v_bracket = true;
  InstanceBundle b{std::move(name), mod, std::move(omega), AlgebraHom::identity(q.algebra), ex,
                   hat_h, std::nullopt, std::nullopt};
  return b;
}

/// h = sl_n acting on V = M_n (row-major coordinates) by commutators, ω(x,y) = [x,y].
inline InstanceBundle matrix_algebra_example(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::ValidationError, "matrix_algebra_example needs n >= 2");
  const Matrix incl = sl_basis(n);
  const LieAlgebra h = matrix_lie_algebra(n, incl);
  const std::size_t d = h.dim(), m = n * n;
  std::vector<Matrix> action;
  for (std::size_t a = 0; a < d; ++a) {
    const Matrix x = unflatten(n, incl.column(a));
    Matrix rho(m, m);
    for (std::size_t j = 0; j < m; ++j)
      rho.set_column(j, flatten(commutator(x, unflatten(n, unit<Rational>(m, j)))));
    action.push_back(std::move(rho));
  }
  ModuleAction mod = ModuleAction::validated(h, m, std::move(action));
  Cochain omega(2, d, m);
  for (const auto& ab : index_tuples(d, 2))
    omega.set_value(ab, flatten(commutator(unflatten(n, incl.column(ab[0])),
                                           unflatten(n, incl.column(ab[1])))));
  ExpectedRecord ex;
  ex.sp = ex.ham = ex.h_omega = d;
  ex.rad = 0;
  ex.V_h = 1;
  ex.V_omega = m;
  ex.hat_ham = m;
  ex.poisson_equals_negated_v_bracket = true;
  const LieAlgebra gl = matrix_lie_algebra(n, Matrix::identity(m));
  return {"matrix_algebra_" + std::to_string(n), mod, std::move(omega), AlgebraHom::identity(h),
          ex, gl, std::nullopt, std::nullopt};
}

/// μ(e_i, e_j) = Σ_k mult[(i*d + j)*d + k] e_k. Throws NotAssociative.
inline InstanceBundle associative_algebra_example(std::size_t d, const std::vector<Rational>& mult,
                                                  std::string name = "associative") {
  if (mult.size() != d * d * d) throw Error(ErrorKind::DimensionMismatch, "multiplication table size");
  auto prod = [&](const Vector& x, const Vector& y) {
    Vector out(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (y[j] == 0) continue;
        for (std::size_t k = 0; k < d; ++k) out[k] += x[i] * y[j] * mult[(i * d + j) * d + k];
      }
    }
    return out;
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Vector ei = unit<Rational>(d, i), ej = unit<Rational>(d, j), ek = unit<Rational>(d, k);
        if (prod(prod(ei, ej), ek) != prod(ei, prod(ej, ek)))
          throw Error(ErrorKind::NotAssociative, "(e" + std::to_string(i) + " e" + std::to_string(j) +
                                                     ") e" + std::to_string(k));
      }
  std::vector<Rational> c(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        c[(i * d + j) * d + k] = mult[(i * d + j) * d + k] - mult[(j * d + i) * d + k];
  const LieAlgebra lie = LieAlgebra::validated(d, std::move(c));
  const Subspace z = center_of(lie);
  const QuotientAlgebra q = quotient_algebra(lie, z);
  const std::size_t r = q.algebra.dim();
  const Matrix& sigma = q.projection.section;
  std::vector<Matrix> action;
  for (std::size_t a = 0; a < r; ++a) action.push_back(lie.ad(sigma.column(a)));
  ModuleAction mod = ModuleAction::validated(q.algebra, d, std::move(action));
  Cochain omega(2, r, d);
  for (const auto& ab : index_tuples(r, 2))
    omega.set_value(ab, lie.bracket(sigma.column(ab[0]), sigma.column(ab[1])));
  Cochain shifted = omega - differential(mod, Cochain::from_linear_map(sigma));
  for (const auto& ab : index_tuples(r, 2))
    if (!z.contains(shifted.value(ab)))
      throw std::logic_error("shifted cocycle leaves the center");
  ExpectedRecord ex;
  ex.sp = ex.ham = ex.h_omega = r;
  ex.V_h = z.dim();
  ex.V_omega = d;
  ex.hat_ham = d;
  ex.poisson_equals_negated_v_bracket = true;
  return {std::move(name), mod, std::move(omega), AlgebraHom::identity(q.algebra), ex, lie,
          std::move(shifted), sigma};
}

/// Multiplication table of the full matrix algebra M_n (row-major basis).
inline std::vector<Rational> matrix_multiplication_table(std::size_t n) {
  const std::size_t d = n * n;
  std::vector<Rational> mult(d * d * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        mult[((i * n + j) * d + (j * n + l)) * d + (i * n + l)] = 1;
  return mult;
}

/// Multiplication table of the subalgebra of M_n spanned by the given
/// flattened matrices (columns), in that basis. Throws NotSubalgebra.
inline std::vector<Rational> matrix_subalgebra_table(std::size_t n, const Matrix& basis) {
  const std::size_t d = basis.cols();
  const LinearSolver coords(basis);
  std::vector<Rational> mult(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto x = coords.solve(flatten(unflatten(n, basis.column(i)) * unflatten(n, basis.column(j))));
      if (!x) throw Error(ErrorKind::NotSubalgebra, "product leaves the span");
      for (std::size_t k = 0; k < d; ++k) mult[(i * d + j) * d + k] = (*x)[k];
    }
  return mult;
}

/// Compares an analysis against the bundle's expected record; returns the
/// names of the facts that do not hold.
inline std::vector<std::string> check_expected(const InstanceBundle& b, const HamiltonianAnalysis& an) {
  std::vector<std::string> failures;
  const ExpectedRecord& e = b.expected;
  auto dim_check = [&](const char* name, const std::optional<std::size_t>& want, std::size_t got) {
    if (want && *want != got)
      failures.push_back(std::string(name) + ": expected " + std::to_string(*want) + ", got " +
                         std::to_string(got));
  };
  dim_check("sp", e.sp, an.sp().dim());
  dim_check("ham", e.ham, an.ham().dim());
  dim_check("rad", e.rad, an.rad().dim());
  dim_check("h_omega", e.h_omega, an.h_omega().dim());
  dim_check("V_h", e.V_h, an.V_h().dim());
  dim_check("V_omega", e.V_omega, an.V_omega().dim());
  dim_check("hat_ham", e.hat_ham, an.hat_ham().dim());
  if ((e.poisson_equals_v_bracket || e.poisson_equals_negated_v_bracket) && b.v_bracket) {
    const std::size_t m = b.module.dim();
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
      for (std::size_t j = i + 1; j < m && ok; ++j) {
        const Vector pb = poisson_bracket(an, unit<Rational>(m, i), unit<Rational>(m, j));
        const Vector vb = b.v_bracket->bracket_basis(i, j);
        ok = e.poisson_equals_v_bracket ? pb == vb : pb == negated(vb);
      }
    if (!ok) failures.push_back("Poisson bracket does not match the bracket on V");
  }
  return failures;
}

namespace detail {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(unsigned num, unsigned den) { return gen_() % den < num; }
  Rational small(long bound = 2) { return Rational(uniform(-bound, bound)); }
  Rational nonzero(long bound = 2) {
    const long v = uniform(1, bound);
    return Rational(chance(1, 2) ? v : -v);
  }

 private:
  std::mt19937_64 gen_;
};

inline LieAlgebra random_two_step(std::size_t n, Rng& rng) {
  const std::size_t centre = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n / 2)));
  const std::size_t gens = n - centre;
  std::vector<Rational> c(n * n * n);
  for (std::size_t i = 0; i < gens; ++i)
    for (std::size_t j = i + 1; j < gens; ++j)
      for (std::size_t k = gens; k < n; ++k) {
        const Rational v = rng.chance(2, 3) ? rng.nonzero() : Rational(0);
        c[(i * n + j) * n + k] = v;
        c[(j * n + i) * n + k] = -v;
      }
  return LieAlgebra::validated(n, std::move(c));
}

inline LieAlgebra random_semidirect(std::size_t n, Rng& rng) {
  std::vector<Rational> c(n * n * n);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t k = 1; k < n; ++k) {
      const Rational v = rng.chance(2, 3) ? rng.nonzero() : Rational(0);
      c[(0 * n + j) * n + k] = v;
      c[(j * n + 0) * n + k] = -v;
    }
  return LieAlgebra::validated(n, std::move(c));
}

// Random strictly triangular constants c_ij^k (k > max(i, j)), repaired by
// zeroing entries on the first failing Jacobi triple until the identity holds.
inline LieAlgebra random_triangular(std::size_t n, Rng& rng, std::size_t max_repairs) {
  std::vector<Rational> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (rng.chance(2, 3)) {
          const Rational v = rng.nonzero();
          c[(i * n + j) * n + k] = v;
          c[(j * n + i) * n + k] = -v;
        }
  for (std::size_t attempt = 0; attempt <= max_repairs; ++attempt) {
    try {
      return LieAlgebra::validated(n, c);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::JacobiViolation) throw;
    }
    // Zero one entry touching the first failing triple.
    const LieAlgebra raw = LieAlgebra::unchecked(n, c);
    std::size_t ti = 0, tj = 0, tk = 0;
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i)
      for (std::size_t j = i + 1; j < n && !found; ++j)
        for (std::size_t k = j + 1; k < n && !found; ++k)
          if (!is_zero(raw.jacobi_residual(i, j, k))) {
            ti = i, tj = j, tk = k;
            found = true;
          }
    std::vector<std::size_t> nonzero;
    for (std::size_t idx = 0; idx < c.size(); ++idx) {
      const std::size_t i = idx / (n * n), j = (idx / n) % n;
      const bool touches = i == ti || i == tj || i == tk || j == ti || j == tj || j == tk;
      if (i < j && c[idx] != 0 && touches) nonzero.push_back(idx);
    }
    if (nonzero.empty()) break;
    const std::size_t idx = nonzero[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(nonzero.size()) - 1))];
    const std::size_t i = idx / (n * n), j = (idx / n) % n, k = idx % n;
    c[idx] = 0;
    c[(j * n + i) * n + k] = 0;
  }
  throw Error(ErrorKind::GenerationFailed, "could not repair a triangular algebra");
}

inline Matrix random_unimodular(std::size_t m, Rng& rng) {
  Matrix lower = Matrix::identity(m), upper = Matrix::identity(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (rng.chance(1, 3)) lower(i, j) = rng.small(1);
      if (rng.chance(1, 3)) upper(j, i) = rng.small(1);
    }
  return lower * upper;
}

}  // namespace detail

/// A random Lie algebra of dimension n from one of several triangular-type families.
inline LieAlgebra random_lie_algebra(std::size_t n, std::uint64_t seed) {
  detail::Rng rng(seed);
  if (n <= 1) return LieAlgebra::abelian(n);
  switch (rng.uniform(0, 4)) {
    case 0:
      return detail::random_semidirect(n, rng);
    case 1:
      return n >= 3 ? detail::random_two_step(n, rng) : detail::random_semidirect(n, rng);
    case 2:
      if (n >= 3) return direct_sum(sl2(), detail::random_triangular(n - 3, rng, 64));
      return detail::random_semidirect(n, rng);
    default:
      return n >= 3 ? detail::random_triangular(n, rng, 64) : detail::random_semidirect(n, rng);
  }
}

/// The adjoint action restricted to an ideal, in the ideal's canonical basis.
inline ModuleAction ideal_module(const LieAlgebra& h, const Subspace& ideal) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Matrix a(ideal.dim(), ideal.dim());
    for (std::size_t j = 0; j < ideal.dim(); ++j) {
      auto c = ideal.coordinates(h.bracket(unit<Rational>(h.dim(), i), ideal.basis_vector(j)));
      if (!c) throw Error(ErrorKind::NotIdeal, "ideal_module");
      a.set_column(j, *c);
    }
    action.push_back(std::move(a));
  }
  return ModuleAction::validated(h, ideal.dim(), std::move(action));
}

/// The adjoint action on h / ideal, in quotient_map coordinates.
inline ModuleAction quotient_module(const LieAlgebra& h, const Subspace& ideal) {
  const QuotientMap q = quotient_map(h.dim(), ideal);
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < h.dim(); ++i) action.push_back(q.map * h.ad(i) * q.section);
  return ModuleAction::validated(h, q.target_dim(), std::move(action));
}

/// A random module of dimension m: a sum of adjoint, coadjoint, ideal,
/// quotient, character and trivial summands, conjugated by a random
/// unimodular matrix.
inline ModuleAction random_module(const LieAlgebra& h, std::size_t m, std::uint64_t seed) {
  detail::Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t n = h.dim();
  std::vector<Vector> brackets;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) brackets.push_back(h.bracket_basis(i, j));
  const Subspace derived = Subspace::span(n, brackets);
  const Subspace characters = kernel_basis(Matrix::from_rows(n, brackets));
  const Subspace center = center_of(h);

  std::vector<ModuleAction> pieces;
  if (n > 0) {
    const ModuleAction ad = adjoint_module(h);
    pieces.push_back(ad);
    pieces.push_back(dual_module(ad));
    if (derived.dim() > 0) pieces.push_back(ideal_module(h, derived));
    if (center.dim() > 0 && center.dim() < n) pieces.push_back(quotient_module(h, center));
  }
  ModuleAction mod = ModuleAction::trivial(h, 0);
  std::size_t left = m;
  while (left > 0) {
    std::vector<const ModuleAction*> fit;
    for (const auto& p : pieces)
      if (p.dim() <= left) fit.push_back(&p);
    if (!fit.empty() && rng.chance(4, 5)) {
      const ModuleAction& p = *fit[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(fit.size()) - 1))];
      mod = direct_sum(mod, p);
      left -= p.dim();
    } else if (characters.dim() > 0 && rng.chance(2, 3)) {
      Vector lambda(n);
      for (std::size_t k = 0; k < characters.dim(); ++k)
        axpy(lambda, rng.small(1), characters.basis_vector(k));
      std::vector<Matrix> action(n, Matrix(1, 1));
      for (std::size_t i = 0; i < n; ++i) action[i](0, 0) = lambda[i];
      mod = direct_sum(mod, ModuleAction::validated(h, 1, std::move(action)));
      left -= 1;
    } else {
      mod = direct_sum(mod, ModuleAction::trivial(h, 1));
      left -= 1;
    }
  }
  return conjugate_module(mod, detail::random_unimodular(m, rng));
}

/// A random 2-cocycle: a small integer combination of a basis of Z^2(h, V).
inline Cochain random_cocycle(const ModuleAction& mod, std::uint64_t seed) {
  detail::Rng rng(seed ^ 0x5bd1e9955bd1e995ULL);
  const std::size_t n = mod.algebra_dim(), m = mod.dim();
  Cochain omega(2, n, m);
  if (n < 2 || m == 0) return omega;
  const Subspace z2 = n >= 3 ? kernel_basis(differential_matrix(mod, 2))
                             : Subspace::full(omega.size());
  Vector coords(omega.size());
  for (std::size_t k = 0; k < z2.dim(); ++k)
    axpy(coords, rng.small(), z2.basis_vector(k));
  return Cochain::from_coordinates(2, n, m, std::move(coords));
}

/// h-equivariant linear maps h -> V (the 1-cochains with L_xi alpha = 0 for all xi).
inline Subspace equivariant_maps(const ModuleAction& mod) {
  const std::size_t n = mod.algebra_dim(), m = mod.dim();
  const std::size_t size = n * m;
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < n; ++k) {
    Matrix lk(size, size);
    for (std::size_t c = 0; c < size; ++c)
      lk.set_column(c, lie_derivative(mod, unit<Rational>(n, k),
                                      Cochain::from_coordinates(1, n, m, unit<Rational>(size, c)))
                           .coords());
    blocks.push_back(std::move(lk));
  }
  return kernel_basis(vstack(blocks, size));
}

/// A random 2-cochain, usually not a cocycle.
inline Cochain random_cochain(const ModuleAction& mod, std::uint64_t seed) {
  detail::Rng rng(seed ^ 0x2545f4914f6cdd1dULL);
  Cochain omega(2, mod.algebra_dim(), mod.dim());
  Vector coords(omega.size());
  for (auto& x : coords) x = rng.chance(1, 2) ? rng.small() : Rational(0);
  return Cochain::from_coordinates(2, mod.algebra_dim(), mod.dim(), std::move(coords));
}

/// Deterministic random instance of dimensions (dim h, dim V) = (n, m), n, m <= 6.
inline InstanceBundle random_instance(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n > 6 || m > 6) throw Error(ErrorKind::ValidationError, "random_instance: dims must be <= 6");
  LieAlgebra h = random_lie_algebra(n, seed);
  ModuleAction mod = random_module(h, m, seed);
  // Mix a generic cocycle with d_h of an equivariant map; the latter makes
  // i_xi omega exact for many xi, so V_omega is usually larger than V^h.
  detail::Rng rng(seed ^ 0xd6e8feb86659fd93ULL);
  Cochain omega(2, n, m);
  const long mix = rng.uniform(0, 4);
  if (mix == 0 || mix == 4) omega = random_cocycle(mod, seed);
  if (mix != 0 && n >= 2) {
    const Subspace eq = equivariant_maps(mod);
    Vector alpha(n * m);
    for (std::size_t k = 0; k < eq.dim(); ++k) axpy(alpha, rng.small(), eq.basis_vector(k));
    omega = omega + differential(mod, Cochain::from_coordinates(1, n, m, std::move(alpha)));
  }
  return {"random_" + std::to_string(n) + "x" + std::to_string(m) + "_seed" + std::to_string(seed),
          std::move(mod), std::move(omega), std::nullopt, {}, std::nullopt, std::nullopt, std::nullopt};
}

/// from_central_extension applied to a random nilpotent algebra of dimension d
/// and a random nonzero central subspace.
inline InstanceBundle random_central_instance(std::size_t d, std::uint64_t seed) {
  if (d < 2 || d > 6) throw Error(ErrorKind::ValidationError, "random_central_instance: 2 <= d <= 6");
  detail::Rng rng(seed ^ 0xbf58476d1ce4e5b9ULL);
  const LieAlgebra hat_h = rng.chance(1, 2) && d >= 3 ? detail::random_two_step(d, rng)
                                                        : detail::random_triangular(d, rng, 64);
  const Subspace center = center_of(hat_h);
  Vector z(d);
  while (is_zero(z))
    for (std::size_t k = 0; k < center.dim(); ++k) axpy(z, rng.small(), center.basis_vector(k));
  const Subspace zs = center.dim() > 1 && rng.chance(1, 2) ? center : Subspace::span(d, {z});
  return from_central_extension(hat_h, zs, "random_central_" + std::to_string(d) + "_seed" + std::to_string(seed));
}

/// A homomorphism into ham: the inclusion of ham itself, of a line in ham, or
/// of the zero algebra, chosen from the seed.
inline AlgebraHom random_hamiltonian_hom(const HamiltonianAnalysis& an, std::uint64_t seed) {
  detail::Rng rng(seed ^ 0x94d049bb133111ebULL);
  const LieAlgebra& h = an.algebra();
  const Subspace& ham = an.ham();
  const long pick = rng.uniform(0, 3);
  if (ham.dim() == 0 || pick == 0)
    return AlgebraHom::zero(LieAlgebra::abelian(pick == 0 && ham.dim() > 0 ? 1 : 0), h);
  if (pick == 1) {
    Vector x(h.dim());
    while (is_zero(x))
      for (std::size_t k = 0; k < ham.dim(); ++k) axpy(x, rng.small(), ham.basis_vector(k));
    return AlgebraHom::validated(LieAlgebra::abelian(1), h, Matrix::from_columns(h.dim(), {x}));
  }
  return AlgebraHom::validated(subalgebra(h, ham), h, ham.basis());
}

/// Small (dim h, dim V) shapes cycling with the seed.
inline std::pair<std::size_t, std::size_t> mixed_dims(std::uint64_t seed) {
  const std::size_t n = 2 + seed % 4;
  return {n, std::min<std::size_t>(6, n - 1 + (seed / 4) % 4)};
}

/// Alternates random instances with random central extensions.
inline InstanceBundle mixed_instance(std::uint64_t seed, std::size_t offset = 0) {
  if (seed % 3 == 2) return random_central_instance(2 + (seed / 3) % 5, seed);
  const auto [n, m] = mixed_dims(seed + offset);
  return random_instance(n, m, seed);
}

/// A random element of s with small integer coordinates.
inline Vector random_element(const Subspace& s, std::uint64_t seed) {
  detail::Rng rng(seed ^ 0xd6e8feb86659fd93ULL);
  Vector c(s.dim());
  for (auto& x : c) x = rng.small(3);
  return s.from_coordinates(c);
}

/// Data satisfying the hypotheses of both Noether checks: v in V^{g1} ∩ V_omega,
/// xi a hamiltonian lift of v, and a second action g2 = R through xi with J2 = v.
struct NoetherScenario {
  AlgebraHom zeta1;
  Vector v;
  Vector xi;
  AlgebraHom zeta2;
  Matrix J2;
};

inline NoetherScenario noether_scenario(const HamiltonianAnalysis& an, std::uint64_t seed) {
  AlgebraHom zeta1 = random_hamiltonian_hom(an, seed);
  const Subspace fixed = intersect(invariant_vectors(g_module(an, zeta1)), an.V_omega());
  Vector v = random_element(fixed, seed + 40);
  Vector xi = add(hamiltonian_lift(an, v), random_element(an.rad(), seed + 41));
  AlgebraHom zeta2 = AlgebraHom::validated(LieAlgebra::abelian(1), an.algebra(),
                                           Matrix::from_columns(an.algebra().dim(), {xi}));
  Matrix J2 = Matrix::from_columns(an.module().dim(), {v});
  return {std::move(zeta1), std::move(v), std::move(xi), std::move(zeta2),
          std::move(J2)};
}

/// The central extensions used as named examples: heis3, heis5, heis3 + R and the
/// 4-dimensional filiform algebra, each over its quotient by a central ideal.
inline std::vector<InstanceBundle> central_extension_examples() {
  const LieAlgebra heis_line = direct_sum(heisenberg(1), LieAlgebra::abelian(1));
  return {from_central_extension(heisenberg(1), Subspace::span(3, {unit<Rational>(3, 2)}), "heis3"),
          from_central_extension(heisenberg(2), Subspace::span(5, {unit<Rational>(5, 4)}), "heis5"),
          from_central_extension(heis_line, Subspace::span(4, {unit<Rational>(4, 2)}), "heis3+R"),
          from_central_extension(filiform4(), center_of(filiform4()), "filiform4")};
}

/// Every named (non-random) gallery instance.
inline std::vector<InstanceBundle> gallery_instances() {
  std::vector<InstanceBundle> out = central_extension_examples();
  out.push_back(matrix_algebra_example(2));
  out.push_back(matrix_algebra_example(3));
  out.push_back(associative_algebra_example(4, matrix_multiplication_table(2), "assoc_M2"));
  const Matrix upper =
      Matrix::from_columns(4, {elementary(2, 0, 0), elementary(2, 0, 1), elementary(2, 1, 1)});
  out.push_back(associative_algebra_example(3, matrix_subalgebra_table(2, upper), "assoc_upper2"));
  return out;
}

}  // namespace hamflux
