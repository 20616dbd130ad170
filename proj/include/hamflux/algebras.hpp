#pragma once

#include <string>
#include <vector>

#include "hamflux/lie.hpp"

namespace hamflux {

/// sl_2 in the basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
inline LieAlgebra sl2() {
  return lie_algebra_from_brackets(3, {{{0, 1}, {0, 0, 1}}, {{0, 2}, {-2, 0, 0}}, {{1, 2}, {0, 2, 0}}});
}

/// Heisenberg algebra of dimension 2k+1: basis x_1..x_k, y_1..y_k, z with [x_i, y_i] = z.
inline LieAlgebra heisenberg(std::size_t k) {
  const std::size_t n = 2 * k + 1;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vector>> br;
  for (std::size_t i = 0; i < k; ++i) br.push_back({{i, k + i}, unit<Rational>(n, n - 1)});
  return lie_algebra_from_brackets(n, br);
}

/// The 4-dimensional filiform algebra [e1,e2] = e3, [e1,e3] = e4 (0-based basis).
inline LieAlgebra filiform4() {
  return lie_algebra_from_brackets(4, {{{0, 1}, unit<Rational>(4, 2)}, {{0, 2}, unit<Rational>(4, 3)}});
}

/// Elementary matrix E_ij of size n, flattened row-major.
inline Vector elementary(std::size_t n, std::size_t i, std::size_t j) {
  return unit<Rational>(n * n, i * n + j);
}

inline Matrix unflatten(std::size_t n, const Vector& v) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

inline Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

/// sl_n basis as flattened n x n matrices: E_ij (i != j, row-major order),
/// then H_i = E_ii - E_{i+1,i+1}. Returned as the n^2 x (n^2 - 1) inclusion.
inline Matrix sl_basis(std::size_t n) {
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) cols.push_back(elementary(n, i, j));
  for (std::size_t i = 0; i + 1 < n; ++i)
    cols.push_back(sub(elementary(n, i, i), elementary(n, i + 1, i + 1)));
  return Matrix::from_columns(n * n, cols);
}

/// The Lie algebra spanned by matrices (columns of `basis`, flattened n x n)
/// under the commutator. Throws NotSubalgebra if the span is not closed.
inline LieAlgebra matrix_lie_algebra(std::size_t n, const Matrix& basis) {
  const Subspace span = Subspace::column_space(basis);
  const LinearSolver coords(basis);
  const std::size_t d = basis.cols();
  if (span.dim() != d) throw Error(ErrorKind::ValidationError, "matrix basis is dependent");
  std::vector<Rational> c(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Matrix a = unflatten(n, basis.column(i));
      const Matrix b = unflatten(n, basis.column(j));
      auto x = coords.solve(flatten(commutator(a, b)));
      if (!x) throw Error(ErrorKind::NotSubalgebra, "commutator leaves the span");
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = (*x)[k];
    }
  return LieAlgebra::validated(d, std::move(c));
}

inline LieAlgebra sl(std::size_t n) { return matrix_lie_algebra(n, sl_basis(n)); }

}  // namespace hamflux
