#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hamflux/linear.hpp"

namespace hamflux {

/// A finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c(i, j, k) e_k. Instances are validated on construction.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Throws AntisymmetryViolation or JacobiViolation.
  static LieAlgebra validated(std::size_t dim, std::vector<Rational> tensor) {
    if (tensor.size() != dim * dim * dim)
      throw Error(ErrorKind::DimensionMismatch,
                  "structure tensor must have dim^3 entries");
    LieAlgebra a(dim, std::move(tensor));
    a.check_antisymmetry();
    a.check_jacobi();
    return a;
  }

  /// No axiom checks; only for inspecting candidate data such as jacobi_residual.
  static LieAlgebra unchecked(std::size_t dim, std::vector<Rational> tensor) {
    if (tensor.size() != dim * dim * dim)
      throw Error(ErrorKind::DimensionMismatch, "structure tensor must have dim^3 entries");
    return LieAlgebra(dim, std::move(tensor));
  }

  static LieAlgebra abelian(std::size_t dim) {
    return LieAlgebra(dim, std::vector<Rational>(dim * dim * dim));
  }

  std::size_t dim() const noexcept { return dim_; }

  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  const std::vector<Rational>& tensor() const noexcept { return c_; }

  Vector bracket_basis(std::size_t i, std::size_t j) const {
    Vector out(dim_);
    for (std::size_t k = 0; k < dim_; ++k) out[k] = constant(i, j, k);
    return out;
  }

  Vector bracket(const Vector& x, const Vector& y) const {
    if (x.size() != dim_ || y.size() != dim_)
      throw Error(ErrorKind::DimensionMismatch, "bracket: vector size");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j] == 0) continue;
        Rational s = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k)
          if (constant(i, j, k) != 0) out[k] += s * constant(i, j, k);
      }
    }
    return out;
  }

  /// ad(e_i) as a matrix: column j holds [e_i, e_j].
  Matrix ad(std::size_t i) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) m(k, j) = constant(i, j, k);
    return m;
  }

  Matrix ad(const Vector& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      if (x[i] != 0) m = m + x[i] * ad(i);
    return m;
  }

  /// Cyclic Jacobi sum for a basis triple.
  Vector jacobi_residual(std::size_t i, std::size_t j, std::size_t k) const {
    const Vector ei = unit<Rational>(dim_, i);
    const Vector ej = unit<Rational>(dim_, j);
    const Vector ek = unit<Rational>(dim_, k);
    Vector r = bracket(bracket(ei, ej), ek);
    r = add(r, bracket(bracket(ej, ek), ei));
    return add(r, bracket(bracket(ek, ei), ej));
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

 private:
  LieAlgebra(std::size_t dim, std::vector<Rational> c)
      : dim_(dim), c_(std::move(c)) {}

  void check_antisymmetry() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (constant(i, j, k) != -constant(j, i, k))
            throw Error(ErrorKind::AntisymmetryViolation,
                        "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(k) + ")");
  }

  void check_jacobi() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        for (std::size_t k = j + 1; k < dim_; ++k) {
          Vector r = jacobi_residual(i, j, k);
          if (!is_zero(r))
            throw Error(ErrorKind::JacobiViolation,
                        "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(k) + ") residual " + to_string(r));
        }
  }

  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

inline LieAlgebra validate_lie_algebra(std::size_t dim, std::vector<Rational> tensor) {
  return LieAlgebra::validated(dim, std::move(tensor));
}

/// Builds a Lie algebra from its brackets on basis pairs i < j.
inline LieAlgebra lie_algebra_from_brackets(
    std::size_t dim, const std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vector>>&
                         brackets) {
  std::vector<Rational> c(dim * dim * dim);
  for (const auto& [ij, value] : brackets) {
    auto [i, j] = ij;
    for (std::size_t k = 0; k < dim; ++k) {
      c[(i * dim + j) * dim + k] = value[k];
      c[(j * dim + i) * dim + k] = -value[k];
    }
  }
  return LieAlgebra::validated(dim, std::move(c));
}

/// A representation of a Lie algebra on a coordinate space.
class ModuleAction {
 public:
  ModuleAction() = default;

  /// Throws HomViolation(i, j) when rho([e_i, e_j]) != [rho(e_i), rho(e_j)].
  static ModuleAction validated(LieAlgebra algebra, std::size_t module_dim,
                                std::vector<Matrix> action) {
    if (action.size() != algebra.dim())
      throw Error(ErrorKind::DimensionMismatch,
                  "one action matrix per basis element expected");
    for (const auto& m : action)
      if (m.rows() != module_dim || m.cols() != module_dim)
        throw Error(ErrorKind::DimensionMismatch, "action matrix size");
    ModuleAction mod(std::move(algebra), module_dim, std::move(action));
    const std::size_t n = mod.algebra_.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Matrix lhs = mod.action_of(mod.algebra_.bracket_basis(i, j));
        Matrix residual = lhs - commutator(mod.action_[i], mod.action_[j]);
        if (!residual.is_zero()) {
          std::string detail = "(" + std::to_string(i) + "," + std::to_string(j) +
                               ") residual rows:";
          for (std::size_t r = 0; r < residual.rows(); ++r)
            detail += " " + to_string(residual.row(r));
          throw Error(ErrorKind::HomViolation, detail);
        }
      }
    return mod;
  }

  static ModuleAction trivial(LieAlgebra algebra, std::size_t module_dim) {
    std::vector<Matrix> action(algebra.dim(), Matrix(module_dim, module_dim));
    return ModuleAction(std::move(algebra), module_dim, std::move(action));
  }

  const LieAlgebra& algebra() const noexcept { return algebra_; }
  std::size_t algebra_dim() const noexcept { return algebra_.dim(); }
  std::size_t dim() const noexcept { return dim_; }
  const Matrix& action(std::size_t i) const { return action_[i]; }
  const std::vector<Matrix>& actions() const noexcept { return action_; }

  Matrix action_of(const Vector& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0) m = m + x[i] * action_[i];
    return m;
  }

  /// x.v
  Vector act(const Vector& x, const Vector& v) const {
    Vector out(dim_);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0) axpy(out, x[i], action_[i] * v);
    return out;
  }

  friend bool operator==(const ModuleAction& a, const ModuleAction& b) {
    return a.dim_ == b.dim_ && a.algebra_ == b.algebra_ && a.action_ == b.action_;
  }

 private:
  ModuleAction(LieAlgebra algebra, std::size_t dim, std::vector<Matrix> action)
      : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)) {}

  LieAlgebra algebra_;
  std::size_t dim_ = 0;
  std::vector<Matrix> action_;
};

inline ModuleAction validate_module(LieAlgebra algebra, std::vector<Matrix> action) {
  const std::size_t m = action.empty() ? 0 : action.front().rows();
  return ModuleAction::validated(std::move(algebra), m, std::move(action));
}

inline ModuleAction adjoint_module(const LieAlgebra& a) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a.dim(); ++i) action.push_back(a.ad(i));
  return ModuleAction::validated(a, a.dim(), std::move(action));
}

/// rho*(x) = -rho(x)^T, the dual representation.
inline ModuleAction dual_module(const ModuleAction& mod) {
  std::vector<Matrix> action;
  for (const auto& m : mod.actions()) action.push_back(Rational(-1) * m.transpose());
  return ModuleAction::validated(mod.algebra(), mod.dim(), std::move(action));
}

/// Direct sum of modules of the same algebra.
inline ModuleAction direct_sum(const ModuleAction& a, const ModuleAction& b) {
  if (!(a.algebra() == b.algebra()))
    throw Error(ErrorKind::DimensionMismatch, "direct_sum: different algebras");
  const std::size_t m = a.dim() + b.dim();
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a.algebra_dim(); ++i) {
    Matrix block(m, m);
    for (std::size_t r = 0; r < a.dim(); ++r)
      for (std::size_t c = 0; c < a.dim(); ++c) block(r, c) = a.action(i)(r, c);
    for (std::size_t r = 0; r < b.dim(); ++r)
      for (std::size_t c = 0; c < b.dim(); ++c)
        block(a.dim() + r, a.dim() + c) = b.action(i)(r, c);
    action.push_back(std::move(block));
  }
  return ModuleAction::validated(a.algebra(), m, std::move(action));
}

/// Same module in new coordinates v' = P v: rho'(x) = P rho(x) P^-1.
inline ModuleAction conjugate_module(const ModuleAction& mod, const Matrix& p) {
  auto p_inv = inverse(p);
  if (!p_inv) throw Error(ErrorKind::NotInvertible, "conjugate_module");
  std::vector<Matrix> action;
  for (const auto& m : mod.actions()) action.push_back(p * m * *p_inv);
  return ModuleAction::validated(mod.algebra(), mod.dim(), std::move(action));
}

/// {x : [x, y] = 0 for all y}
inline Subspace center_of(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  // Row (j, k), column i: c(i, j, k).
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) stacked(j * n + k, i) = a.constant(i, j, k);
  return kernel_basis(stacked);
}

/// A Lie algebra homomorphism; column a of matrix() is the image of e_a.
class AlgebraHom {
 public:
  AlgebraHom() = default;

  /// Throws BracketViolation(i, j).
  static AlgebraHom validated(LieAlgebra source, LieAlgebra target, Matrix matrix) {
    if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
      throw Error(ErrorKind::DimensionMismatch, "hom matrix must be dim(target) x dim(source)");
    AlgebraHom h(std::move(source), std::move(target), std::move(matrix));
    const std::size_t r = h.source_.dim();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) {
        Vector lhs = h.matrix_ * h.source_.bracket_basis(i, j);
        Vector rhs = h.target_.bracket(h.matrix_.column(i), h.matrix_.column(j));
        if (lhs != rhs)
          throw Error(ErrorKind::BracketViolation,
                      "(" + std::to_string(i) + "," + std::to_string(j) + ") residual " +
                          to_string(sub(lhs, rhs)));
      }
    return h;
  }

  static AlgebraHom zero(LieAlgebra source, LieAlgebra target) {
    Matrix m(target.dim(), source.dim());
    return AlgebraHom(std::move(source), std::move(target), std::move(m));
  }

  static AlgebraHom identity(const LieAlgebra& a) {
    return AlgebraHom(a, a, Matrix::identity(a.dim()));
  }

  const LieAlgebra& source() const noexcept { return source_; }
  const LieAlgebra& target() const noexcept { return target_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  Vector image(std::size_t a) const { return matrix_.column(a); }
  Vector operator()(const Vector& x) const { return matrix_ * x; }

 private:
  AlgebraHom(LieAlgebra source, LieAlgebra target, Matrix matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {}

  LieAlgebra source_;
  LieAlgebra target_;
  Matrix matrix_;
};

inline AlgebraHom validate_hom(const Matrix& zeta, const LieAlgebra& source,
                               const LieAlgebra& target) {
  return AlgebraHom::validated(source, target, zeta);
}

/// The module structure X.v := zeta(X).v on the target's module.
inline ModuleAction pullback_module(const ModuleAction& mod, const AlgebraHom& zeta) {
  if (!(zeta.target() == mod.algebra()))
    throw Error(ErrorKind::DimensionMismatch, "pullback_module: hom target");
  std::vector<Matrix> action;
  for (std::size_t a = 0; a < zeta.source().dim(); ++a)
    action.push_back(mod.action_of(zeta.image(a)));
  return ModuleAction::validated(zeta.source(), mod.dim(), std::move(action));
}

/// Structure constants of a in the basis given by the columns of p.
inline LieAlgebra change_basis(const LieAlgebra& a, const Matrix& p) {
  auto p_inv = inverse(p);
  if (!p_inv) throw Error(ErrorKind::NotInvertible, "change_basis");
  const std::size_t n = a.dim();
  std::vector<Rational> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector b = *p_inv * a.bracket(p.column(i), p.column(j));
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = b[k];
    }
  return LieAlgebra::validated(n, std::move(c));
}

struct QuotientAlgebra {
  LieAlgebra algebra;
  QuotientMap projection;
};

/// a / ideal, in the coordinates of quotient_map. Throws NotIdeal.
inline QuotientAlgebra quotient_algebra(const LieAlgebra& a, const Subspace& ideal) {
  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < ideal.dim(); ++k)
    for (std::size_t j = 0; j < n; ++j)
      if (!ideal.contains(a.bracket(ideal.basis_vector(k), unit<Rational>(n, j))))
        throw Error(ErrorKind::NotIdeal, "subspace is not an ideal");
  auto q = quotient_map(n, ideal);
  const std::size_t d = q.target_dim();
  std::vector<Rational> c(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector b = q(a.bracket(q.section.column(i), q.section.column(j)));
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = b[k];
    }
  return {LieAlgebra::validated(d, std::move(c)), std::move(q)};
}

/// The subalgebra spanned by `sub`, in the coordinates of sub's canonical basis.
/// Throws NotSubalgebra.
inline LieAlgebra subalgebra(const LieAlgebra& a, const Subspace& sub) {
  const std::size_t d = sub.dim();
  std::vector<Rational> c(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto coords = sub.coordinates(a.bracket(sub.basis_vector(i), sub.basis_vector(j)));
      if (!coords) throw Error(ErrorKind::NotSubalgebra, "subspace not closed under bracket");
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = (*coords)[k];
    }
  return LieAlgebra::validated(d, std::move(c));
}

inline bool is_subalgebra(const LieAlgebra& a, const Subspace& sub) {
  for (std::size_t i = 0; i < sub.dim(); ++i)
    for (std::size_t j = i + 1; j < sub.dim(); ++j)
      if (!sub.contains(a.bracket(sub.basis_vector(i), sub.basis_vector(j)))) return false;
  return true;
}

inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<Rational> c(n * n * n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) c[(i * n + j) * n + k] = a.constant(i, j, k);
  const std::size_t o = a.dim();
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        c[((o + i) * n + (o + j)) * n + (o + k)] = b.constant(i, j, k);
  return LieAlgebra::validated(n, std::move(c));
}

/// Whether phi (columns = images of basis vectors) preserves brackets.
inline bool preserves_brackets(const Matrix& phi, const LieAlgebra& source,
                               const LieAlgebra& target) {
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = i + 1; j < source.dim(); ++j)
      if (phi * source.bracket_basis(i, j) != target.bracket(phi.column(i), phi.column(j)))
        return false;
  return true;
}

}  // namespace hamflux
