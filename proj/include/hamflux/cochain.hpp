#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "hamflux/lie.hpp"

namespace hamflux {

/// Highest cochain degree the complex supports.
inline constexpr std::size_t kMaxCochainDegree = 3;

namespace detail {

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Colex rank of a strictly increasing tuple.
inline std::size_t colex_rank(std::span<const std::size_t> tuple) {
  std::size_t r = 0;
  for (std::size_t t = 0; t < tuple.size(); ++t) r += binomial(tuple[t], t + 1);
  return r;
}

inline void enumerate_tuples(std::size_t n, std::size_t p, std::size_t start,
                             std::vector<std::size_t>& cur,
                             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == p) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    enumerate_tuples(n, p, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Strictly increasing p-tuples from {0..n-1}, in storage (colex) order.
inline std::vector<std::vector<std::size_t>> index_tuples(std::size_t n, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  detail::enumerate_tuples(n, p, 0, cur, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return detail::colex_rank(a) < detail::colex_rank(b);
  });
  return out;
}

/// An alternating p-linear map from an n-dimensional Lie algebra to an
/// m-dimensional module. Only strictly increasing index tuples are stored;
/// other tuples are recovered by antisymmetry.
class Cochain {
 public:
  Cochain() = default;

  Cochain(std::size_t degree, std::size_t algebra_dim, std::size_t module_dim)
      : degree_(degree), n_(algebra_dim), m_(module_dim) {
    if (degree > kMaxCochainDegree)
      throw Error(ErrorKind::UnsupportedDegree, "degree " + std::to_string(degree));
    coords_.resize(detail::binomial(n_, degree_) * m_);
  }

  static Cochain from_coordinates(std::size_t degree, std::size_t algebra_dim,
                                  std::size_t module_dim, Vector coords) {
    Cochain c(degree, algebra_dim, module_dim);
    if (coords.size() != c.coords_.size())
      throw Error(ErrorKind::DimensionMismatch, "cochain coordinate count");
    c.coords_ = std::move(coords);
    return c;
  }

  static Cochain constant(std::size_t algebra_dim, const Vector& v) {
    return from_coordinates(0, algebra_dim, v.size(), v);
  }

  /// The 1-cochain x -> f x for an m x n matrix f.
  static Cochain from_linear_map(const Matrix& f) {
    Cochain c(1, f.cols(), f.rows());
    for (std::size_t i = 0; i < f.cols(); ++i) c.set_value({i}, f.column(i));
    return c;
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t algebra_dim() const noexcept { return n_; }
  std::size_t module_dim() const noexcept { return m_; }
  std::size_t size() const noexcept { return coords_.size(); }
  const Vector& coords() const noexcept { return coords_; }

  /// Value on basis elements e_{i_1}, ..., e_{i_p} in any order.
  Vector value(std::span<const std::size_t> indices) const {
    if (indices.size() != degree_)
      throw Error(ErrorKind::DimensionMismatch, "cochain arity");
    std::size_t sorted[kMaxCochainDegree];
    std::copy(indices.begin(), indices.end(), sorted);
    bool odd = false;
    for (std::size_t a = 0; a < degree_; ++a)
      for (std::size_t b = 0; b + 1 < degree_ - a; ++b)
        if (sorted[b] > sorted[b + 1]) {
          std::swap(sorted[b], sorted[b + 1]);
          odd = !odd;
        }
    for (std::size_t a = 0; a + 1 < degree_; ++a)
      if (sorted[a] == sorted[a + 1]) return Vector(m_);
    const std::size_t base = detail::colex_rank({sorted, degree_}) * m_;
    Vector out(coords_.begin() + base, coords_.begin() + base + m_);
    return odd ? negated(std::move(out)) : out;
  }

  Vector value(std::initializer_list<std::size_t> indices) const {
    return value(std::span<const std::size_t>(indices.begin(), indices.size()));
  }

  /// Sets the value on a strictly increasing tuple.
  void set_value(std::span<const std::size_t> increasing, const Vector& v) {
    if (increasing.size() != degree_ || v.size() != m_)
      throw Error(ErrorKind::DimensionMismatch, "set_value");
    for (std::size_t a = 0; a + 1 < degree_; ++a)
      if (increasing[a] >= increasing[a + 1])
        throw Error(ErrorKind::ValidationError, "set_value needs increasing indices");
    const std::size_t base = detail::colex_rank(increasing) * m_;
    std::copy(v.begin(), v.end(), coords_.begin() + base);
  }

  void set_value(std::initializer_list<std::size_t> increasing, const Vector& v) {
    set_value(std::span<const std::size_t>(increasing.begin(), increasing.size()), v);
  }

  /// Value on arbitrary algebra vectors (multilinear expansion).
  Vector evaluate(std::span<const Vector> args) const {
    if (args.size() != degree_) throw Error(ErrorKind::DimensionMismatch, "evaluate arity");
    Vector out(m_);
    std::size_t idx[kMaxCochainDegree] = {};
    expand(args, 0, Rational(1), idx, out);
    return out;
  }

  Vector evaluate(std::initializer_list<Vector> args) const {
    return evaluate(std::span<const Vector>(args.begin(), args.size()));
  }

  bool is_zero() const { return hamflux::is_zero(coords_); }

  friend Cochain operator+(Cochain a, const Cochain& b) {
    a.check_compatible(b);
    a.coords_ = add(std::move(a.coords_), b.coords_);
    return a;
  }
  friend Cochain operator-(Cochain a, const Cochain& b) {
    a.check_compatible(b);
    a.coords_ = sub(std::move(a.coords_), b.coords_);
    return a;
  }
  friend Cochain operator*(const Rational& s, Cochain a) {
    a.coords_ = scaled(std::move(a.coords_), s);
    return a;
  }
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree_ == b.degree_ && a.n_ == b.n_ && a.m_ == b.m_ && a.coords_ == b.coords_;
  }

 private:
  void check_compatible(const Cochain& b) const {
    if (degree_ != b.degree_ || n_ != b.n_ || m_ != b.m_)
      throw Error(ErrorKind::DimensionMismatch, "incompatible cochains");
  }

  void expand(std::span<const Vector> args, std::size_t slot, const Rational& coef,
              std::size_t* idx, Vector& out) const {
    if (slot == degree_) {
      axpy(out, coef, value(std::span<const std::size_t>(idx, degree_)));
      return;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (args[slot][i] == 0) continue;
      idx[slot] = i;
      expand(args, slot + 1, coef * args[slot][i], idx, out);
    }
  }

  std::size_t degree_ = 0;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  Vector coords_;
};

/// Chevalley-Eilenberg differential
/// (dc)(x_0..x_p) = sum_i (-1)^i x_i.c(..^i..) + sum_{i<j} (-1)^(i+j) c([x_i,x_j], ..^i..^j..).
inline Cochain differential(const ModuleAction& mod, const Cochain& c) {
  const std::size_t p = c.degree();
  if (p + 1 > kMaxCochainDegree)
    throw Error(ErrorKind::UnsupportedDegree, "differential of degree " + std::to_string(p));
  const std::size_t n = mod.algebra_dim();
  if (c.algebra_dim() != n || c.module_dim() != mod.dim())
    throw Error(ErrorKind::DimensionMismatch, "differential: cochain/module");
  const LieAlgebra& lie = mod.algebra();
  Cochain out(p + 1, n, mod.dim());
  std::vector<std::size_t> rest;
  for (const auto& x : index_tuples(n, p + 1)) {
    Vector acc(mod.dim());
    for (std::size_t i = 0; i <= p; ++i) {
      rest.clear();
      for (std::size_t t = 0; t <= p; ++t)
        if (t != i) rest.push_back(x[t]);
      Vector term = mod.action(x[i]) * c.value(rest);
      if (i % 2) acc = sub(std::move(acc), term);
      else acc = add(std::move(acc), term);
    }
    for (std::size_t i = 0; i <= p; ++i)
      for (std::size_t j = i + 1; j <= p; ++j) {
        const Rational sign = (i + j) % 2 ? -1 : 1;
        for (std::size_t k = 0; k < n; ++k) {
          const Rational& ck = lie.constant(x[i], x[j], k);
          if (ck == 0) continue;
          rest.assign(1, k);
          for (std::size_t t = 0; t <= p; ++t)
            if (t != i && t != j) rest.push_back(x[t]);
          axpy(acc, Rational(sign * ck), c.value(rest));
        }
      }
    out.set_value(x, acc);
  }
  return out;
}

/// (i_xi c)(y, ...) = c(xi, y, ...)
inline Cochain contract(const Vector& xi, const Cochain& c) {
  if (c.degree() == 0) throw Error(ErrorKind::DegreeZero, "contract");
  if (xi.size() != c.algebra_dim()) throw Error(ErrorKind::DimensionMismatch, "contract");
  const std::size_t p = c.degree();
  Cochain out(p - 1, c.algebra_dim(), c.module_dim());
  std::vector<std::size_t> args;
  for (const auto& y : index_tuples(c.algebra_dim(), p - 1)) {
    Vector acc(c.module_dim());
    for (std::size_t k = 0; k < xi.size(); ++k) {
      if (xi[k] == 0) continue;
      args.assign(1, k);
      args.insert(args.end(), y.begin(), y.end());
      axpy(acc, xi[k], c.value(args));
    }
    out.set_value(y, acc);
  }
  return out;
}

/// (L_xi c)(y_1..y_p) = xi.c(y_1..y_p) - sum_i c(y_1, .., [xi, y_i], .., y_p)
inline Cochain lie_derivative(const ModuleAction& mod, const Vector& xi, const Cochain& c) {
  const std::size_t n = mod.algebra_dim();
  if (xi.size() != n || c.algebra_dim() != n || c.module_dim() != mod.dim())
    throw Error(ErrorKind::DimensionMismatch, "lie_derivative");
  const std::size_t p = c.degree();
  const Matrix rho = mod.action_of(xi);
  const Matrix ad = mod.algebra().ad(xi);
  Cochain out(p, n, mod.dim());
  std::vector<Vector> args;
  for (const auto& y : index_tuples(n, p)) {
    Vector acc = rho * c.value(y);
    for (std::size_t i = 0; i < p; ++i) {
      args.clear();
      for (std::size_t t = 0; t < p; ++t)
        args.push_back(t == i ? ad.column(y[t]) : unit<Rational>(n, y[t]));
      acc = sub(std::move(acc), c.evaluate(args));
    }
    out.set_value(y, acc);
  }
  return out;
}

/// Matrix of the differential C^p -> C^(p+1) in storage coordinates.
inline Matrix differential_matrix(const ModuleAction& mod, std::size_t p) {
  const std::size_t n = mod.algebra_dim();
  const std::size_t m = mod.dim();
  const std::size_t src = detail::binomial(n, p) * m;
  const std::size_t dst = detail::binomial(n, p + 1) * m;
  Matrix d(dst, src);
  for (std::size_t col = 0; col < src; ++col) {
    Cochain e = Cochain::from_coordinates(p, n, m, unit<Rational>(src, col));
    d.set_column(col, differential(mod, e).coords());
  }
  return d;
}

/// {v : x.v = 0 for all x}
inline Subspace invariant_vectors(const ModuleAction& mod) {
  return kernel_basis(vstack(mod.actions(), mod.dim()));
}

/// H^p as Z^p / B^p inside the coordinate space of C^p.
class CohomologySpace {
 public:
  CohomologySpace(std::size_t degree, Subspace cocycles, Subspace coboundaries)
      : degree_(degree),
        cocycles_(std::move(cocycles)),
        coboundaries_(std::move(coboundaries)),
        quotient_(quotient_map(cocycles_.ambient_dim(), coboundaries_)),
        classes_(image(quotient_.map, cocycles_)) {}

  std::size_t degree() const noexcept { return degree_; }
  std::size_t dim() const noexcept { return cocycles_.dim() - coboundaries_.dim(); }
  const Subspace& cocycles() const noexcept { return cocycles_; }
  const Subspace& coboundaries() const noexcept { return coboundaries_; }
  const QuotientMap& quotient() const noexcept { return quotient_; }

  /// Coordinates of [c] in H^p. Throws NotCocycle.
  Vector class_of(const Cochain& c) const {
    if (!cocycles_.contains(c.coords()))
      throw Error(ErrorKind::NotCocycle, "class_of: not a cocycle");
    return *classes_.coordinates(quotient_(c.coords()));
  }

  bool is_coboundary(const Cochain& c) const { return coboundaries_.contains(c.coords()); }

 private:
  std::size_t degree_;
  Subspace cocycles_;
  Subspace coboundaries_;
  QuotientMap quotient_;
  Subspace classes_;
};

inline CohomologySpace cohomology(const ModuleAction& mod, std::size_t p) {
  if (p + 1 > kMaxCochainDegree)
    throw Error(ErrorKind::UnsupportedDegree, "cohomology degree " + std::to_string(p));
  Subspace cocycles = kernel_basis(differential_matrix(mod, p));
  Subspace coboundaries =
      p == 0 ? Subspace::zero(cocycles.ambient_dim())
             : Subspace::column_space(differential_matrix(mod, p - 1));
  return CohomologySpace(p, std::move(cocycles), std::move(coboundaries));
}

}  // namespace hamflux
