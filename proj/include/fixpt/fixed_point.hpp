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

#ifndef FIXPT_FIXED_POINT_HPP
#define FIXPT_FIXED_POINT_HPP

#include <cassert>
#include <cstddef>

#include "fixpt/errors.hpp"
#include "fixpt/linalg.hpp"
#include "fixpt/matrix.hpp"

namespace fixpt {

/// F(A) = ker(A - I), the subspace of vectors with Av = v.
inline Subspace fixed_space(const Matrix& a) {
  if (!a.is_square()) throw NotSquare();
  return kernel_basis(a - Matrix::identity(a.rows()));
}

/// dim F(A), computed as n - rank(A - I).
inline std::size_t dim_fixed(const Matrix& a) {
  if (!a.is_square()) throw NotSquare();
  const std::size_t n = a.rows();
  const std::size_t d = n - rank(a - Matrix::identity(n));
  assert(d == fixed_space(a).dim());
  return d;
}

/// ker(A) obtained as F(A + I).
inline Subspace kernel_via_fixed(const Matrix& a) {
  if (!a.is_square()) throw NotSquare();
  return fixed_space(a + Matrix::identity(a.rows()));
}

struct FixedReport {
  std::size_t dim = 0;
  Subspace space = Subspace::zero(0);
  std::size_t rank_of_a = 0;  // always >= dim
};

inline FixedReport fixed_report(const Matrix& a) {
  FixedReport out;
  out.space = fixed_space(a);
  out.dim = out.space.dim();
  out.rank_of_a = rank(a);
  assert(out.rank_of_a >= out.dim);
  return out;
}

}  // namespace fixpt

#endif  // FIXPT_FIXED_POINT_HPP
