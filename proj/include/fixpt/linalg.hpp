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

#ifndef FIXPT_LINALG_HPP
#define FIXPT_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "fixpt/errors.hpp"
#include "fixpt/matrix.hpp"

namespace fixpt {

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;  // increasing
};

/// Gauss-Jordan elimination with exact division. The reduced form is
/// unique, so pivot choice only affects speed; the first nonzero entry in
/// each column is used.
inline RrefResult rref(const Matrix& m) {
  Matrix r = m;
  const std::size_t rows = r.rows();
  const std::size_t cols = r.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < cols && lead_row < rows; ++c) {
    std::size_t p = lead_row;
    while (p < rows && r(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != lead_row) {
      for (std::size_t k = c; k < cols; ++k) {
        std::swap(r(p, k), r(lead_row, k));
      }
    }
    const GaussianRational inv = GaussianRational(1) / r(lead_row, c);
    for (std::size_t k = c; k < cols; ++k) {
      r(lead_row, k) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead_row || r(i, c).is_zero()) continue;
      const GaussianRational factor = r(i, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (r(lead_row, k).is_zero()) continue;
        r(i, k) -= factor * r(lead_row, k);
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(r), pivots.size(), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// A linear subspace of C^n held as a canonical basis.
///
/// The basis is stored as an n x k matrix whose transpose is in reduced row
/// echelon form, so two subspaces are equal exactly when their stored bases
/// are entrywise identical.
class Subspace {
 public:
  /// Span of the columns of `generators` inside C^rows.
  static Subspace span(const Matrix& generators) {
    const std::size_t n = generators.rows();
    const RrefResult red = rref(generators.transpose());
    Matrix basis(n, red.rank);
    for (std::size_t k = 0; k < red.rank; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        basis(i, k) = red.reduced(k, i);
      }
    }
    return Subspace(n, std::move(basis));
  }

  static Subspace zero(std::size_t n) { return Subspace(n, Matrix(n, 0)); }
  static Subspace full(std::size_t n) { return span(Matrix::identity(n)); }

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.cols(); }
  const Matrix& basis() const noexcept { return basis_; }

  bool contains(const Matrix& v) const {
    if (v.rows() != ambient_dim_ || v.cols() != 1) {
      throw SizeMismatch("vector " + v.shape() + " in C^" +
                         std::to_string(ambient_dim_));
    }
    return rank(hstack(basis_, v)) == dim();
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(std::size_t n, Matrix basis)
      : ambient_dim_(n), basis_(std::move(basis)) {}

  std::size_t ambient_dim_ = 0;
  Matrix basis_;
};

/// Throws AmbientMismatch when the ambient dimensions differ.
inline bool subspace_equal(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw AmbientMismatch();
  }
  return u == v;
}

/// Null space of m as a subspace of C^cols.
inline Subspace kernel_basis(const Matrix& m) {
  const std::size_t cols = m.cols();
  const RrefResult red = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : red.pivot_cols) is_pivot[c] = true;

  Matrix gens(cols, cols - red.rank);
  std::size_t k = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    gens(free, k) = 1;
    for (std::size_t r = 0; r < red.rank; ++r) {
      gens(red.pivot_cols[r], k) = -red.reduced(r, free);
    }
    ++k;
  }
  return Subspace::span(gens);
}

/// Throws NotSquare or SingularMatrix.
inline Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw NotSquare();
  const std::size_t n = m.rows();
  const RrefResult red = rref(hstack(m, Matrix::identity(n)));
  if (red.rank < n || (n > 0 && red.pivot_cols[n - 1] != n - 1)) {
    throw SingularMatrix();
  }
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      out(r, c) = red.reduced(r, n + c);
    }
  }
  return out;
}

inline bool is_invertible(const Matrix& m) {
  return m.is_square() && rank(m) == m.rows();
}

/// Kronecker product: block (i, j) is a(i, j) * b.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const GaussianRational& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

/// The n^2 x n^2 permutation K with K vec(A) = vec(A^T).
inline Matrix commutation_matrix(std::size_t n) {
  Matrix k(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // vec(A^T)[j*n + i] = A^T(i, j) = A(j, i) = vec(A)[i*n + j]
      k(vec_index(n, i, j), vec_index(n, j, i)) = 1;
    }
  }
  return k;
}

}  // namespace fixpt

#endif  // FIXPT_LINALG_HPP
