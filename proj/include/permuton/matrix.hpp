#pragma once

/**
 * @file matrix.hpp
 * @brief Small dense matrices over an exact field (Rational or Cyclotomic).
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "permuton/cyclotomic.hpp"
#include "permuton/errors.hpp"

namespace permuton {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_)
        throw Error(ErrorKind::invalid_argument, "ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw Error(ErrorKind::degree_mismatch, "matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!(b(k, j) == T(0))) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix r = a;
    for (auto& v : r.data_) v = s * v;
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!(v == T(0))) return false;
    return true;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(ErrorKind::degree_mismatch, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using CycloMatrix = Matrix<Cyclotomic>;

inline CycloMatrix conj_transpose(const CycloMatrix& m) {
  CycloMatrix r(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = conj(m(i, j));
  return r;
}

/// Gauss-Jordan inverse over the field; throws if singular.
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::invalid_argument, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> a = m;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == T(0)) ++p;
    if (p == n) throw Error(ErrorKind::division_by_zero, "singular matrix");
    if (p != c)
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a(p, k), a(c, k));
        std::swap(inv(p, k), inv(c, k));
      }
    T pivot_inv = T(1) / a(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) = a(c, k) * pivot_inv;
      inv(c, k) = inv(c, k) * pivot_inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == T(0)) continue;
      T factor = a(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= factor * a(c, k);
        inv(r, k) -= factor * inv(c, k);
      }
    }
  }
  return inv;
}

}  // namespace permuton
