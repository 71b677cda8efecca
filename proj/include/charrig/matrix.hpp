#pragma once

// Dense row-major matrices over Z and Q. Boundary matrices at corpus scale
// are at most a few hundred rows; every product skips zero entries, which
// keeps the sparse ones cheap without a separate sparse type.

#include "charrig/errors.hpp"
#include "charrig/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace charrig {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  void set_column(std::size_t j, std::span<const T> values) {
    if (values.size() != rows_) throw ShapeError("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn((*this)(i, j)) != 0) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Columns [first, last) as a new matrix.
  Matrix columns(std::size_t first, std::size_t last) const {
    Matrix out(rows_, last - first);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = first; j < last; ++j) out(i, j - first) = (*this)(i, j);
    return out;
  }

  /// Rows [first, last) as a new matrix.
  Matrix rows_range(std::size_t first, std::size_t last) const {
    Matrix out(last - first, cols_);
    for (std::size_t i = first; i < last; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i - first, j) = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (sgn(x) != 0) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ZMatrix = Matrix<Integer>;
using QMatrix = Matrix<Rational>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows())
    throw ShapeError("matrix product: " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " times " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto crow = c.row(i);
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const T& x = a(i, l);
      if (sgn(x) == 0) continue;
      auto brow = b.row(l);
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(brow[j]) != 0) crow[j] += x * brow[j];
    }
  }
  return c;
}

/// A * x for a matrix over Z or Q and a vector over a (possibly wider) ring.
template <typename T, typename V>
std::vector<V> multiply(const Matrix<T>& a, std::span<const V> x) {
  if (a.cols() != x.size())
    throw ShapeError("matrix-vector product: " + std::to_string(a.cols()) +
                     " columns vs vector of length " + std::to_string(x.size()));
  std::vector<V> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    V acc = 0;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (sgn(r[j]) != 0 && sgn(x[j]) != 0) acc += r[j] * x[j];
    y[i] = acc;
  }
  return y;
}

template <typename T, typename V>
std::vector<V> multiply(const Matrix<T>& a, const std::vector<V>& x) {
  return multiply<T, V>(a, std::span<const V>(x));
}

/// A^T * x without materialising the transpose.
template <typename T, typename V>
std::vector<V> multiply_transposed(const Matrix<T>& a, std::span<const V> x) {
  if (a.rows() != x.size())
    throw ShapeError("transposed matrix-vector product: " + std::to_string(a.rows()) +
                     " rows vs vector of length " + std::to_string(x.size()));
  std::vector<V> y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (sgn(x[i]) == 0) continue;
    auto r = a.row(i);
    for (std::size_t j = 0; j < r.size(); ++j)
      if (sgn(r[j]) != 0) y[j] += r[j] * x[i];
  }
  return y;
}

template <typename T, typename V>
std::vector<V> multiply_transposed(const Matrix<T>& a, const std::vector<V>& x) {
  return multiply_transposed<T, V>(a, std::span<const V>(x));
}

inline QMatrix to_rational(const ZMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(i, j);
  return q;
}

}  // namespace charrig
