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

#ifndef FIXPT_RANDOM_HPP
#define FIXPT_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "fixpt/gaussian_rational.hpp"
#include "fixpt/linalg.hpp"
#include "fixpt/matrix.hpp"

namespace fixpt {

/// Deterministic, splittable generator driven by a single 64-bit seed.
///
/// The engine is mt19937_64, whose output sequence is fixed by the standard.
/// Bounded draws use rejection sampling rather than std distributions, whose
/// results vary between standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Independent child stream; the same (seed, stream) always yields the
  /// same child.
  Rng split(std::uint64_t stream) const {
    return Rng(mix(seed_ ^ mix(stream + 0x9e3779b97f4a7c15ULL)));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw = next();
    while (draw >= limit) draw = next();
    return lo + static_cast<std::int64_t>(draw % span);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Numerator in [-9, 9], denominator in {1, 2, 3}.
inline mpq_class random_small_rational(Rng& rng) {
  const long num = static_cast<long>(rng.uniform(-9, 9));
  const long den = static_cast<long>(rng.uniform(1, 3));
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

inline GaussianRational random_real_scalar(Rng& rng) {
  return GaussianRational(random_small_rational(rng));
}

/// Real and imaginary parts drawn independently.
inline GaussianRational random_scalar(Rng& rng) {
  mpq_class re = random_small_rational(rng);
  mpq_class im = random_small_rational(rng);
  return GaussianRational(std::move(re), std::move(im));
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                            bool gaussian = true) {
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      out(r, c) = gaussian ? random_scalar(rng) : random_real_scalar(rng);
    }
  }
  return out;
}

/// Nonzero random column vector.
inline Matrix random_nonzero_vector(Rng& rng, std::size_t n,
                                    bool gaussian = true) {
  Matrix v = random_matrix(rng, n, 1, gaussian);
  while (v.is_zero()) v = random_matrix(rng, n, 1, gaussian);
  return v;
}

/// Redraws until the sample has full rank.
inline Matrix random_invertible(Rng& rng, std::size_t n, bool gaussian = true) {
  Matrix m = random_matrix(rng, n, n, gaussian);
  while (!is_invertible(m)) m = random_matrix(rng, n, n, gaussian);
  return m;
}

}  // namespace fixpt

#endif  // FIXPT_RANDOM_HPP
