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

#ifndef FIXPT_RANK_ONE_HPP
#define FIXPT_RANK_ONE_HPP

#include <cstddef>
#include <utility>

#include "fixpt/errors.hpp"
#include "fixpt/linalg.hpp"
#include "fixpt/matrix.hpp"

namespace fixpt {

/// The pair (x, f) behind the rank-one operator x⊗f : y ↦ f(y) x.
struct RankOneSpec {
  Matrix x;  // n x 1
  Matrix f;  // 1 x n
};

/// f(x) for a 1 x n functional and an n x 1 vector.
inline GaussianRational evaluate(const Matrix& f, const Matrix& x) {
  if (f.rows() != 1 || x.cols() != 1 || f.cols() != x.rows()) {
    throw SizeMismatch("functional " + f.shape() + " on vector " + x.shape());
  }
  return (f * x)(0, 0);
}

/// The outer product x f. Throws ZeroFactor if either factor vanishes.
inline Matrix rank_one(const RankOneSpec& spec) {
  if (spec.x.cols() != 1 || spec.f.rows() != 1 ||
      spec.x.rows() != spec.f.cols()) {
    throw SizeMismatch("rank-one factors " + spec.x.shape() + " and " +
                       spec.f.shape());
  }
  if (spec.x.is_zero() || spec.f.is_zero()) throw ZeroFactor();
  return spec.x * spec.f;
}

inline Matrix rank_one(const Matrix& x, const Matrix& f) {
  return rank_one(RankOneSpec{x, f});
}

/// P^2 == P exactly.
inline bool is_idempotent(const Matrix& p) {
  if (!p.is_square()) throw NotSquare();
  return p * p == p;
}

inline bool is_rank_one_idempotent(const Matrix& p) {
  return is_idempotent(p) && rank(p) == 1;
}

/// PQ == 0 and QP == 0.
inline bool are_orthogonal(const Matrix& p, const Matrix& q) {
  if (!p.is_square() || !q.is_square() || p.rows() != q.rows()) {
    throw SizeMismatch("orthogonality test of " + p.shape() + " and " +
                       q.shape());
  }
  return (p * q).is_zero() && (q * p).is_zero();
}

/// A functional f with f(x) = 1 and f(Ax) = 0.
///
/// {x, Ax} is extended to a basis by appending standard basis vectors e_k in
/// index order whenever they keep the set independent; f is the first row of
/// the inverse of that basis, i.e. the dual functional of x.
inline Matrix completion_functional(const Matrix& a, const Matrix& x) {
  if (!a.is_square() || x.cols() != 1 || x.rows() != a.rows()) {
    throw SizeMismatch("completion of " + a.shape() + " at " + x.shape());
  }
  const std::size_t n = a.rows();
  Matrix basis = hstack(x, a * x);
  if (rank(basis) != 2) throw DependentPair();
  for (std::size_t k = 0; k < n && basis.cols() < n; ++k) {
    Matrix candidate = hstack(basis, Matrix::basis_vector(n, k));
    if (rank(candidate) == candidate.cols()) {
      basis = std::move(candidate);
    }
  }
  return inverse(basis).row_at(0);
}

/// The rank-one idempotent P = (x - Ax)⊗f with (A + P)x = x.
/// Throws DependentPair when x and Ax are linearly dependent.
inline Matrix completion_idempotent(const Matrix& a, const Matrix& x) {
  const Matrix f = completion_functional(a, x);
  return rank_one(x - a * x, f);
}

}  // namespace fixpt

#endif  // FIXPT_RANK_ONE_HPP
