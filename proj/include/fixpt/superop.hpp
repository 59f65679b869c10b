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

#ifndef FIXPT_SUPEROP_HPP
#define FIXPT_SUPEROP_HPP

#include <cstddef>
#include <functional>
#include <utility>

#include "fixpt/errors.hpp"
#include "fixpt/linalg.hpp"
#include "fixpt/matrix.hpp"

namespace fixpt {

inline constexpr std::size_t kMaxSuperopDim = 16;

/// A linear map on M_n held as the n^2 x n^2 matrix L acting on vec(A)
/// (column stacking).
class SuperOp {
 public:
  SuperOp(std::size_t n, Matrix l) : n_(n), l_(std::move(l)) {
    if (n_ < 1 || n_ > kMaxSuperopDim) throw UnsupportedDimension(n_);
    if (l_.rows() != n_ * n_ || l_.cols() != n_ * n_) {
      throw SizeMismatch("superoperator matrix " + l_.shape() + " for n = " +
                         std::to_string(n_));
    }
  }

  std::size_t n() const noexcept { return n_; }
  const Matrix& matrix() const noexcept { return l_; }

  friend bool operator==(const SuperOp& a, const SuperOp& b) {
    return a.n_ == b.n_ && a.l_ == b.l_;
  }

 private:
  std::size_t n_;
  Matrix l_;
};

/// unvec(L vec(A)).
inline Matrix apply(const SuperOp& phi, const Matrix& a) {
  if (a.rows() != phi.n() || a.cols() != phi.n()) {
    throw SizeMismatch("applying superoperator on M_" +
                       std::to_string(phi.n()) + " to " + a.shape());
  }
  return unvec(phi.matrix() * vec(a), phi.n());
}

/// Builds the superoperator of an arbitrary linear map by evaluating it on
/// the matrix units E_ij.
inline SuperOp superop_from_map(std::size_t n,
                                const std::function<Matrix(const Matrix&)>& f) {
  Matrix l(n * n, n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const Matrix image = vec(f(Matrix::unit(n, i, j)));
      const std::size_t c = vec_index(n, i, j);
      for (std::size_t r = 0; r < n * n; ++r) l(r, c) = image(r, 0);
    }
  }
  return SuperOp(n, std::move(l));
}

inline SuperOp identity_superop(std::size_t n) {
  return SuperOp(n, Matrix::identity(n * n));
}

/// A ↦ A^T.
inline SuperOp transpose_superop(std::size_t n) {
  return SuperOp(n, commutation_matrix(n));
}

/// A ↦ λ S A S^{-1}, i.e. L = λ (S^{-1})^T ⊗ S. Throws SingularMatrix.
inline SuperOp similarity_superop(const Matrix& s,
                                  const GaussianRational& lambda) {
  const Matrix s_inv = inverse(s);
  return SuperOp(s.rows(), lambda * kron(s_inv.transpose(), s));
}

/// A ↦ λ S A^T S^{-1}, i.e. L = λ ((S^{-1})^T ⊗ S) K. Throws SingularMatrix.
inline SuperOp transpose_similarity_superop(const Matrix& s,
                                            const GaussianRational& lambda) {
  const Matrix s_inv = inverse(s);
  return SuperOp(s.rows(), lambda * kron(s_inv.transpose(), s) *
                               commutation_matrix(s.rows()));
}

/// Φ1 ∘ Φ2.
inline SuperOp compose(const SuperOp& phi1, const SuperOp& phi2) {
  if (phi1.n() != phi2.n()) throw SizeMismatch("composition across M_n sizes");
  return SuperOp(phi1.n(), phi1.matrix() * phi2.matrix());
}

/// Realignment: M[γn + α, βn + δ] = L[βn + α, δn + γ].
///
/// Maps of the form A ↦ S A T (L = T^T ⊗ S) realign to vec(S) vec(T)^T,
/// which has rank one.
inline Matrix realign(const Matrix& l, std::size_t n) {
  if (l.rows() != n * n || l.cols() != n * n) {
    throw SizeMismatch("realigning " + l.shape() + " for n = " +
                       std::to_string(n));
  }
  Matrix m(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t d = 0; d < n; ++d) {
          m(g * n + a, b * n + d) = l(b * n + a, d * n + g);
        }
      }
    }
  }
  return m;
}

inline Matrix realign(const SuperOp& phi) {
  return realign(phi.matrix(), phi.n());
}

/// Inverse index permutation of realign: realign_inverse(realign(L)) = L.
inline Matrix realign_inverse(const Matrix& m, std::size_t n) {
  if (m.rows() != n * n || m.cols() != n * n) {
    throw SizeMismatch("realigning " + m.shape() + " for n = " +
                       std::to_string(n));
  }
  Matrix l(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t d = 0; d < n; ++d) {
          l(b * n + a, d * n + g) = m(g * n + a, b * n + d);
        }
      }
    }
  }
  return l;
}

struct RankOneFactors {
  Matrix u;  // column, first nonzero entry equal to 1
  Matrix v;  // column, M = u v^T
};

/// Factors a rank-one M as u v^T with the first nonzero entry of u equal to
/// 1. Throws NotRankOne.
inline RankOneFactors rank_one_factor(const Matrix& m) {
  if (rank(m) != 1) throw NotRankOne();
  std::size_t col = 0;
  while (m.col(col).is_zero()) ++col;
  std::size_t lead = 0;
  while (m(lead, col).is_zero()) ++lead;
  // u = column `col` scaled so u[lead] = 1; then v^T is row `lead` of M.
  const GaussianRational inv = GaussianRational(1) / m(lead, col);
  return {inv * m.col(col), m.row_at(lead).transpose()};
}

/// Surjective (equivalently bijective) on M_n: rank(L) = n^2.
inline bool is_bijective(const SuperOp& phi) {
  return rank(phi.matrix()) == phi.n() * phi.n();
}

}  // namespace fixpt

#endif  // FIXPT_SUPEROP_HPP
