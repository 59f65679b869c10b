// Copyright 2026 The fixpt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FIXPT_MATRIX_HPP
#define FIXPT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fixpt/errors.hpp"
#include "fixpt/gaussian_rational.hpp"

namespace fixpt {

/// Dense row-major matrix over the Gaussian rationals.
///
/// Column vectors are n x 1 matrices and functionals are 1 x n matrices.
/// A dimension may be zero; that only happens for the basis of a zero
/// subspace (n x 0).
class Matrix {
 public:
  using value_type = GaussianRational;

  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  Matrix(std::size_t rows, std::size_t cols,
         std::vector<GaussianRational> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw SizeMismatch("entry count does not match rows * cols");
    }
  }

  Matrix(std::initializer_list<std::initializer_list<GaussianRational>> init)
      : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
    entries_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) {
        throw SizeMismatch("ragged initializer list");
      }
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static Matrix zeros(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols);
  }

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      out(i, i) = 1;
    }
    return out;
  }

  /// Matrix unit E_ij (0-based indices) in M_n.
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix out(n, n);
    out(i, j) = 1;
    return out;
  }

  static Matrix column(std::vector<GaussianRational> values) {
    const std::size_t n = values.size();
    return Matrix(n, 1, std::move(values));
  }

  static Matrix row(std::vector<GaussianRational> values) {
    const std::size_t n = values.size();
    return Matrix(1, n, std::move(values));
  }

  /// Standard basis column e_i (0-based) of length n.
  static Matrix basis_vector(std::size_t n, std::size_t i) {
    Matrix out(n, 1);
    out(i, 0) = 1;
    return out;
  }

  static Matrix diagonal(const std::vector<GaussianRational>& values) {
    Matrix out(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      out(i, i) = values[i];
    }
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const GaussianRational> entries() const noexcept {
    return entries_;
  }

  bool is_zero() const {
    for (const auto& z : entries_) {
      if (!z.is_zero()) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        out(c, r) = (*this)(r, c);
      }
    }
    return out;
  }

  Matrix col(std::size_t c) const {
    Matrix out(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) {
      out(r, 0) = (*this)(r, c);
    }
    return out;
  }

  Matrix row_at(std::size_t r) const {
    Matrix out(1, cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
      out(0, c) = (*this)(r, c);
    }
    return out;
  }

  Matrix& operator+=(const Matrix& rhs) {
    require_same_shape(rhs, "addition");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      entries_[k] += rhs.entries_[k];
    }
    return *this;
  }

  Matrix& operator-=(const Matrix& rhs) {
    require_same_shape(rhs, "subtraction");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      entries_[k] -= rhs.entries_[k];
    }
    return *this;
  }

  Matrix& operator*=(const GaussianRational& s) {
    for (auto& z : entries_) {
      z *= s;
    }
    return *this;
  }

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator-(Matrix m) {
    for (auto& z : m.entries_) {
      z = -z;
    }
    return m;
  }
  friend Matrix operator*(const GaussianRational& s, Matrix m) {
    return m *= s;
  }
  friend Matrix operator*(Matrix m, const GaussianRational& s) {
    return m *= s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw SizeMismatch("product of " + a.shape() + " and " + b.shape());
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const GaussianRational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j).is_zero()) continue;
          out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << (r ? ", [" : "[");
      for (std::size_t c = 0; c < m.cols_; ++c) {
        os << (c ? ", " : "") << m(r, c);
      }
      os << ']';
    }
    return os << ']';
  }

 private:
  void require_same_shape(const Matrix& rhs, const char* op) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
      throw SizeMismatch(std::string(op) + " of " + shape() + " and " +
                         rhs.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> entries_;
};

/// Horizontal concatenation [a | b].
inline Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw SizeMismatch("hstack of " + a.shape() + " and " + b.shape());
  }
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

// Column-stacking vectorization: entry (i, j) of an n x n matrix lands at
// index j*n + i. Every superoperator in the library assumes this.

inline std::size_t vec_index(std::size_t n, std::size_t i, std::size_t j) {
  return j * n + i;
}

inline Matrix vec(const Matrix& a) {
  Matrix out(a.rows() * a.cols(), 1);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      out(j * a.rows() + i, 0) = a(i, j);
    }
  }
  return out;
}

/// Inverse of vec for a square n x n result.
inline Matrix unvec(const Matrix& v, std::size_t n) {
  if (v.cols() != 1 || v.rows() != n * n) {
    throw SizeMismatch("unvec of " + v.shape() + " into " + std::to_string(n) +
                       "x" + std::to_string(n));
  }
  Matrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      out(i, j) = v(vec_index(n, i, j), 0);
    }
  }
  return out;
}

/// First nonzero entry in column-major order, or nullptr for the zero matrix.
inline const GaussianRational* first_nonzero_colmajor(const Matrix& m) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (!m(r, c).is_zero()) return &m(r, c);
    }
  }
  return nullptr;
}

/// Scales m so its first nonzero entry (column-major) equals 1. The zero
/// matrix is returned unchanged.
inline Matrix gauge_normalize(const Matrix& m) {
  const GaussianRational* lead = first_nonzero_colmajor(m);
  if (lead == nullptr) return m;
  const GaussianRational inv = GaussianRational(1) / *lead;
  return inv * m;
}

}  // namespace fixpt

#endif  // FIXPT_MATRIX_HPP
