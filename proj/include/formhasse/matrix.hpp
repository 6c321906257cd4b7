#pragma once

// Dense row-major matrices over an exact field (Rat or K5Elem).

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "formhasse/ntheory.hpp"

namespace formhasse {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error("Matrix: ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix diagonal(std::span<const T> entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && !((*this)(i, j) == T(0))) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("Matrix: shape mismatch in product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Exact determinant by Gaussian elimination.
  T determinant() const {
    if (!is_square()) throw Error("Matrix: determinant of non-square matrix");
    Matrix m = *this;
    T det(1);
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t pivot = c;
      while (pivot < rows_ && m(pivot, c) == T(0)) ++pivot;
      if (pivot == rows_) return T(0);
      if (pivot != c) {
        m.swap_rows(pivot, c);
        det = -det;
      }
      det *= m(c, c);
      const T inv = T(1) / m(c, c);
      for (std::size_t r = c + 1; r < rows_; ++r) {
        if (m(r, c) == T(0)) continue;
        const T f = m(r, c) * inv;
        for (std::size_t j = c; j < cols_; ++j) m(r, j) -= f * m(c, j);
      }
    }
    return det;
  }

  /// Gauss-Jordan inverse; throws Error when singular.
  Matrix inverse() const {
    if (!is_square()) throw Error("Matrix: inverse of non-square matrix");
    const std::size_t n = rows_;
    Matrix m = *this;
    Matrix inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t pivot = c;
      while (pivot < n && m(pivot, c) == T(0)) ++pivot;
      if (pivot == n) throw Error("Matrix: singular matrix has no inverse");
      m.swap_rows(pivot, c);
      inv.swap_rows(pivot, c);
      const T scale = T(1) / m(c, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(c, j) *= scale;
        inv(c, j) *= scale;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || m(r, c) == T(0)) continue;
        const T f = m(r, c);
        for (std::size_t j = 0; j < n; ++j) {
          m(r, j) -= f * m(c, j);
          inv(r, j) -= f * inv(c, j);
        }
      }
    }
    return inv;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

}  // namespace formhasse
