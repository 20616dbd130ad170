#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hamflux/matrix.hpp"

namespace hamflux {

template <class T>
struct BasicRref {
  BasicMatrix<T> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const noexcept { return pivots.size(); }
};

namespace detail {

// Gauss-Jordan elimination in place. When `companion` is non-null the same row
// operations are applied to it, so companion ends up as P with P * m0 = rref.
template <class T>
std::vector<std::size_t> gauss_jordan(BasicMatrix<T>& m,
                                      BasicMatrix<T>* companion) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
      if (companion)
        for (std::size_t j = 0; j < companion->cols(); ++j)
          std::swap((*companion)(p, j), (*companion)(r, j));
    }
    if (m(r, c) != 1) {
      T inv = 1 / m(r, c);
      for (std::size_t j = c; j < cols; ++j)
        if (m(r, j) != 0) m(r, j) *= inv;
      if (companion)
        for (std::size_t j = 0; j < companion->cols(); ++j)
          if ((*companion)(r, j) != 0) (*companion)(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
      if (companion)
        for (std::size_t j = 0; j < companion->cols(); ++j)
          if ((*companion)(r, j) != 0)
            (*companion)(i, j) -= f * (*companion)(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

template <class T>
BasicRref<T> rref_with_pivots(BasicMatrix<T> m) {
  auto pivots = detail::gauss_jordan<T>(m, nullptr);
  return {std::move(m), std::move(pivots)};
}

/// Reduced row echelon form, computed exactly. Pivots are 1 and are the only
/// nonzero entries of their columns.
template <class T>
BasicMatrix<T> rref(BasicMatrix<T> m) {
  detail::gauss_jordan<T>(m, nullptr);
  return m;
}

template <class T>
std::size_t rank(const BasicMatrix<T>& m) {
  return rref_with_pivots(m).rank();
}

/// A linear subspace of T^ambient, stored by its canonical basis: the columns
/// are in reduced column echelon form, so two spans are equal exactly when
/// their representations are equal.
template <class T>
class BasicSubspace {
 public:
  BasicSubspace() = default;

  static BasicSubspace zero(std::size_t ambient) {
    BasicSubspace s;
    s.ambient_ = ambient;
    s.basis_ = BasicMatrix<T>(ambient, 0);
    return s;
  }

  static BasicSubspace full(std::size_t ambient) {
    BasicSubspace s;
    s.ambient_ = ambient;
    s.basis_ = BasicMatrix<T>::identity(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
    return s;
  }

  /// Span of arbitrary (possibly dependent) vectors.
  static BasicSubspace span(std::size_t ambient,
                            const std::vector<BasicVector<T>>& vectors) {
    for (const auto& v : vectors)
      if (v.size() != ambient)
        throw Error(ErrorKind::DimensionMismatch, "span: vector size");
    auto red = rref_with_pivots(BasicMatrix<T>::from_rows(ambient, vectors));
    BasicSubspace s;
    s.ambient_ = ambient;
    s.basis_ = BasicMatrix<T>(ambient, red.rank());
    for (std::size_t k = 0; k < red.rank(); ++k)
      for (std::size_t i = 0; i < ambient; ++i) s.basis_(i, k) = red.reduced(k, i);
    s.pivots_ = std::move(red.pivots);
    return s;
  }

  /// Column space of m.
  static BasicSubspace column_space(const BasicMatrix<T>& m) {
    std::vector<BasicVector<T>> cols;
    cols.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
    return span(m.rows(), cols);
  }

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return pivots_.size(); }
  const BasicMatrix<T>& basis() const noexcept { return basis_; }
  BasicVector<T> basis_vector(std::size_t k) const { return basis_.column(k); }
  std::vector<BasicVector<T>> basis_vectors() const {
    std::vector<BasicVector<T>> out;
    for (std::size_t k = 0; k < dim(); ++k) out.push_back(basis_vector(k));
    return out;
  }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Coordinates with respect to basis(), or nullopt when v is outside.
  std::optional<BasicVector<T>> coordinates(const BasicVector<T>& v) const {
    if (v.size() != ambient_)
      throw Error(ErrorKind::DimensionMismatch, "coordinates: vector size");
    BasicVector<T> coords(dim());
    for (std::size_t k = 0; k < dim(); ++k) coords[k] = v[pivots_[k]];
    if (basis_ * coords != v) return std::nullopt;
    return coords;
  }

  BasicVector<T> from_coordinates(const BasicVector<T>& coords) const {
    return basis_ * coords;
  }

  bool contains(const BasicVector<T>& v) const {
    return coordinates(v).has_value();
  }

  bool contains(const BasicSubspace& other) const {
    if (other.ambient_ != ambient_)
      throw Error(ErrorKind::DimensionMismatch, "contains: ambient");
    for (std::size_t k = 0; k < other.dim(); ++k)
      if (!contains(other.basis_vector(k))) return false;
    return true;
  }

  friend bool operator==(const BasicSubspace& a, const BasicSubspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  BasicMatrix<T> basis_;
  std::vector<std::size_t> pivots_;
};

using Subspace = BasicSubspace<Rational>;

/// Exact null space of m.
template <class T>
BasicSubspace<T> kernel_basis(const BasicMatrix<T>& m) {
  auto red = rref_with_pivots(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<BasicVector<T>> vectors;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BasicVector<T> v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < red.rank(); ++r) v[red.pivots[r]] = -red.reduced(r, f);
    vectors.push_back(std::move(v));
  }
  return BasicSubspace<T>::span(m.cols(), vectors);
}

template <class T>
struct BasicAffineSolution {
  BasicVector<T> particular;
  BasicSubspace<T> kernel;
};

/// Solves m x = b exactly. The particular solution sets every free variable to
/// zero. Returns nullopt when b is outside the image.
template <class T>
std::optional<BasicAffineSolution<T>> solve_affine(const BasicMatrix<T>& m,
                                                   const BasicVector<T>& b) {
  if (b.size() != m.rows())
    throw Error(ErrorKind::DimensionMismatch, "solve_affine: rhs size");
  BasicMatrix<T> aug = hstack<T>({m, BasicMatrix<T>::from_columns(m.rows(), {b})},
                                 m.rows());
  auto red = rref_with_pivots(std::move(aug));
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  BasicVector<T> x(m.cols());
  for (std::size_t r = 0; r < red.rank(); ++r)
    x[red.pivots[r]] = red.reduced(r, m.cols());
  return BasicAffineSolution<T>{std::move(x), kernel_basis(m)};
}

/// A reusable exact solver for a fixed matrix: stores P with P * A = rref(A).
/// Solutions agree with solve_affine's particular solution.
template <class T>
class BasicLinearSolver {
 public:
  BasicLinearSolver() = default;
  explicit BasicLinearSolver(const BasicMatrix<T>& a)
      : cols_(a.cols()), reduced_(a), transform_(BasicMatrix<T>::identity(a.rows())) {
    pivots_ = detail::gauss_jordan<T>(reduced_, &transform_);
  }

  std::optional<BasicVector<T>> solve(const BasicVector<T>& b) const {
    if (b.size() != transform_.cols())
      throw Error(ErrorKind::DimensionMismatch, "LinearSolver: rhs size");
    BasicVector<T> c = transform_ * b;
    for (std::size_t r = pivots_.size(); r < c.size(); ++r)
      if (c[r] != 0) return std::nullopt;
    BasicVector<T> x(cols_);
    for (std::size_t r = 0; r < pivots_.size(); ++r) x[pivots_[r]] = c[r];
    return x;
  }

  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  std::size_t cols_ = 0;
  BasicMatrix<T> reduced_;
  BasicMatrix<T> transform_;
  std::vector<std::size_t> pivots_;
};

using LinearSolver = BasicLinearSolver<Rational>;

/// Linear surjection onto T^(ambient - dim sub) whose kernel is exactly sub,
/// together with the canonical section (unit vectors at non-pivot coordinates).
template <class T>
struct BasicQuotientMap {
  BasicMatrix<T> map;      // (ambient - k) x ambient
  BasicMatrix<T> section;  // ambient x (ambient - k), map * section = id

  std::size_t target_dim() const noexcept { return map.rows(); }
  BasicVector<T> operator()(const BasicVector<T>& v) const { return map * v; }
};

using QuotientMap = BasicQuotientMap<Rational>;
using AffineSolution = BasicAffineSolution<Rational>;

template <class T>
BasicQuotientMap<T> quotient_map(std::size_t ambient, const BasicSubspace<T>& sub) {
  if (sub.ambient_dim() != ambient)
    throw Error(ErrorKind::DimensionMismatch, "quotient_map: ambient");
  const auto& pivots = sub.pivots();
  std::vector<long> pivot_row(ambient, -1);
  for (std::size_t k = 0; k < pivots.size(); ++k) pivot_row[pivots[k]] = static_cast<long>(k);
  std::vector<std::size_t> free_coords;
  for (std::size_t i = 0; i < ambient; ++i)
    if (pivot_row[i] < 0) free_coords.push_back(i);

  BasicQuotientMap<T> q{BasicMatrix<T>(free_coords.size(), ambient),
                        BasicMatrix<T>(ambient, free_coords.size())};
  // v -> (v - sum_k v[p_k] b_k) restricted to the free coordinates.
  for (std::size_t j = 0; j < ambient; ++j) {
    for (std::size_t a = 0; a < free_coords.size(); ++a) {
      if (pivot_row[j] < 0)
        q.map(a, j) = free_coords[a] == j ? T(1) : T(0);
      else
        q.map(a, j) = -sub.basis()(free_coords[a], static_cast<std::size_t>(pivot_row[j]));
    }
  }
  for (std::size_t a = 0; a < free_coords.size(); ++a) q.section(free_coords[a], a) = 1;
  return q;
}

template <class T>
BasicSubspace<T> intersect(const BasicSubspace<T>& a, const BasicSubspace<T>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "intersect: ambient");
  const std::size_t n = a.ambient_dim();
  // A s = B t  <=>  [A | -B] (s, t) = 0
  BasicMatrix<T> stacked = hstack<T>({a.basis(), T(-1) * b.basis()}, n);
  auto ker = kernel_basis(stacked);
  std::vector<BasicVector<T>> vectors;
  for (std::size_t k = 0; k < ker.dim(); ++k) {
    auto st = ker.basis_vector(k);
    vectors.push_back(a.basis() * slice(st, 0, a.dim()));
  }
  return BasicSubspace<T>::span(n, vectors);
}

template <class T>
BasicSubspace<T> sum(const BasicSubspace<T>& a, const BasicSubspace<T>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "sum: ambient");
  auto vs = a.basis_vectors();
  auto ws = b.basis_vectors();
  vs.insert(vs.end(), ws.begin(), ws.end());
  return BasicSubspace<T>::span(a.ambient_dim(), vs);
}

/// Image m(sub).
template <class T>
BasicSubspace<T> image(const BasicMatrix<T>& m, const BasicSubspace<T>& sub) {
  return BasicSubspace<T>::column_space(m * sub.basis());
}

/// Exact inverse, or nullopt when singular.
template <class T>
std::optional<BasicMatrix<T>> inverse(const BasicMatrix<T>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  BasicMatrix<T> work = m;
  BasicMatrix<T> p = BasicMatrix<T>::identity(m.rows());
  auto pivots = detail::gauss_jordan<T>(work, &p);
  if (pivots.size() != m.rows()) return std::nullopt;
  return p;
}

}  // namespace hamflux
