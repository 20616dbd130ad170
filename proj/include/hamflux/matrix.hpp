#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hamflux/errors.hpp"
#include "hamflux/rational.hpp"

namespace hamflux {

template <class T>
using BasicVector = std::vector<T>;
using Vector = BasicVector<Rational>;

/// Dense row-major matrix over a field T.
template <class T>
class BasicMatrix {
 public:
  BasicMatrix() = default;
  BasicMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  BasicMatrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      assert(r.size() == cols_);
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static BasicMatrix identity(std::size_t n) {
    BasicMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static BasicMatrix from_columns(std::size_t rows,
                                  const std::vector<BasicVector<T>>& columns) {
    BasicMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      assert(columns[c].size() == rows);
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  static BasicMatrix from_rows(std::size_t cols,
                               const std::vector<BasicVector<T>>& rows) {
    BasicMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      assert(rows[r].size() == cols);
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  BasicVector<T> row(std::size_t r) const {
    return BasicVector<T>(data_.begin() + r * cols_,
                          data_.begin() + (r + 1) * cols_);
  }

  BasicVector<T> column(std::size_t c) const {
    BasicVector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void set_column(std::size_t c, const BasicVector<T>& v) {
    assert(v.size() == rows_);
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  BasicMatrix transpose() const {
    BasicMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  BasicVector<T> operator*(const BasicVector<T>& v) const {
    assert(v.size() == cols_);
    BasicVector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      T acc = 0;
      const T* row = &data_[r * cols_];
      for (std::size_t c = 0; c < cols_; ++c)
        if (row[c] != 0 && v[c] != 0) acc += row[c] * v[c];
      out[r] = acc;
    }
    return out;
  }

  friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
    if (a.cols_ != b.rows_)
      throw Error(ErrorKind::DimensionMismatch, "matrix product");
    BasicMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error(ErrorKind::DimensionMismatch, "matrix sum");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error(ErrorKind::DimensionMismatch, "matrix difference");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend BasicMatrix operator*(const T& s, BasicMatrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend bool operator==(const BasicMatrix& a, const BasicMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Matrix = BasicMatrix<Rational>;

/// Commutator ab - ba.
template <class T>
BasicMatrix<T> commutator(const BasicMatrix<T>& a, const BasicMatrix<T>& b) {
  return a * b - b * a;
}

/// Stacks blocks vertically; all blocks must share a column count.
template <class T>
BasicMatrix<T> vstack(const std::vector<BasicMatrix<T>>& blocks,
                      std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(ErrorKind::DimensionMismatch, "vstack");
    rows += b.rows();
  }
  BasicMatrix<T> out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c) out(r0 + r, c) = b(r, c);
    r0 += b.rows();
  }
  return out;
}

/// Places blocks side by side; all blocks must share a row count.
template <class T>
BasicMatrix<T> hstack(const std::vector<BasicMatrix<T>>& blocks,
                      std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw Error(ErrorKind::DimensionMismatch, "hstack");
    cols += b.cols();
  }
  BasicMatrix<T> out(rows, cols);
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c0 + c) = b(r, c);
    c0 += b.cols();
  }
  return out;
}

// Vector helpers. Named functions rather than operators: std::vector<mpq_class>
// has no associated namespace of ours for ADL to find.

template <class T>
BasicVector<T> zeros(std::size_t n) {
  return BasicVector<T>(n);
}

template <class T>
BasicVector<T> unit(std::size_t n, std::size_t i) {
  BasicVector<T> v(n);
  v[i] = 1;
  return v;
}

template <class T>
BasicVector<T> add(BasicVector<T> a, const BasicVector<T>& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "add");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class T>
BasicVector<T> sub(BasicVector<T> a, const BasicVector<T>& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "sub");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class T>
BasicVector<T> scaled(BasicVector<T> a, const T& s) {
  for (auto& x : a) x *= s;
  return a;
}

template <class T>
BasicVector<T> negated(BasicVector<T> a) {
  for (auto& x : a) x = -x;
  return a;
}

/// y += s * x
template <class T>
void axpy(BasicVector<T>& y, const T& s, const BasicVector<T>& x) {
  if (s == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] += s * x[i];
}

template <class T>
bool is_zero(const BasicVector<T>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

template <class T>
BasicVector<T> concat(BasicVector<T> a, const BasicVector<T>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

template <class T>
BasicVector<T> slice(const BasicVector<T>& v, std::size_t begin,
                     std::size_t count) {
  return BasicVector<T>(v.begin() + begin, v.begin() + begin + count);
}

inline std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

}  // namespace hamflux
