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

#ifndef FIXPT_PRESERVER_HPP
#define FIXPT_PRESERVER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fixpt/errors.hpp"
#include "fixpt/fixed_point.hpp"
#include "fixpt/linalg.hpp"
#include "fixpt/matrix.hpp"
#include "fixpt/random.hpp"
#include "fixpt/rank_one.hpp"
#include "fixpt/superop.hpp"

namespace fixpt {

// ---------------------------------------------------------------------------
// Probe suite
// ---------------------------------------------------------------------------

/// Number of structured probes that precede the random ones: 0, -I, I, the
/// n - 1 proper diagonal partial sums, E_12 (n >= 2 only), J_n(1), one
/// rank-one idempotent and one non-idempotent rank-one.
inline std::size_t structured_probe_count(std::size_t n) {
  return 3 + (n - 1) + (n >= 2 ? 1 : 0) + 3;
}

/// Deterministic witness list for the condition checkers. The structured
/// prefix pins every value 0..n of dim F and both rank-one classes; the
/// `trials` random matrices after it are drawn from independent streams of
/// `seed`.
inline std::vector<Matrix> probe_suite(std::size_t n, std::size_t trials,
                                       std::uint64_t seed) {
  std::vector<Matrix> probes;
  probes.reserve(structured_probe_count(n) + trials);
  const Matrix id = Matrix::identity(n);
  // -I precedes I so that sign-flipping maps report the witness -I with
  // dims (0, n).
  probes.push_back(Matrix::zeros(n, n));
  probes.push_back(-id);
  probes.push_back(id);

  Matrix partial = Matrix::zeros(n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    partial(k, k) = 1;
    probes.push_back(partial);
  }
  if (n >= 2) probes.push_back(Matrix::unit(n, 0, 1));

  Matrix jordan = id;
  for (std::size_t k = 0; k + 1 < n; ++k) jordan(k, k + 1) = 1;
  probes.push_back(jordan);

  // x = (1, ..., 1): f = e_1^T gives f(x) = 1, f = 2 e_1^T gives f(x) = 2.
  const Matrix ones = Matrix::column(std::vector<GaussianRational>(n, 1));
  Matrix f = Matrix::zeros(1, n);
  f(0, 0) = 1;
  probes.push_back(rank_one(ones, f));
  f(0, 0) = 2;
  probes.push_back(rank_one(ones, f));

  const Rng base(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = base.split(t);
    probes.push_back(random_matrix(rng, n, n));
  }
  return probes;
}

// ---------------------------------------------------------------------------
// Condition checkers
// ---------------------------------------------------------------------------

enum class Condition {
  kFixedSet,  // F(A) = F(Φ(A))
  kFixedDim,  // dim F(A) = dim F(Φ(A))
};

enum class Outcome { kPass, kCounterexample };

/// Result of a condition check. A counterexample is always genuine; a pass
/// only covers the `probes_run` probes that were tried.
struct Verdict {
  Condition condition = Condition::kFixedDim;
  Outcome outcome = Outcome::kPass;
  std::optional<Matrix> witness;
  std::optional<std::size_t> witness_index;
  std::optional<std::pair<std::size_t, std::size_t>> dims;   // kFixedDim
  std::optional<std::pair<Subspace, Subspace>> spaces;       // kFixedSet
  std::size_t probes_run = 0;
  std::uint64_t seed = 0;

  bool passed() const noexcept { return outcome == Outcome::kPass; }
};

inline Verdict check_condition2(const SuperOp& phi, std::size_t trials,
                                std::uint64_t seed) {
  Verdict v;
  v.condition = Condition::kFixedDim;
  v.seed = seed;
  const std::vector<Matrix> probes = probe_suite(phi.n(), trials, seed);
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const std::size_t lhs = dim_fixed(probes[k]);
    const std::size_t rhs = dim_fixed(apply(phi, probes[k]));
    v.probes_run = k + 1;
    if (lhs != rhs) {
      v.outcome = Outcome::kCounterexample;
      v.witness = probes[k];
      v.witness_index = k;
      v.dims = {lhs, rhs};
      return v;
    }
  }
  return v;
}

inline Verdict check_condition1(const SuperOp& phi, std::size_t trials,
                                std::uint64_t seed) {
  Verdict v;
  v.condition = Condition::kFixedSet;
  v.seed = seed;
  const std::vector<Matrix> probes = probe_suite(phi.n(), trials, seed);
  for (std::size_t k = 0; k < probes.size(); ++k) {
    Subspace lhs = fixed_space(probes[k]);
    Subspace rhs = fixed_space(apply(phi, probes[k]));
    v.probes_run = k + 1;
    if (!subspace_equal(lhs, rhs)) {
      v.outcome = Outcome::kCounterexample;
      v.witness = probes[k];
      v.witness_index = k;
      v.spaces.emplace(std::move(lhs), std::move(rhs));
      return v;
    }
  }
  return v;
}

/// The scalar η with Φ(A) + P = η (A + P), or nullopt when the two sides are
/// not proportional. If both sides vanish every η works and 1 is returned.
/// Throws NotRankOneIdempotent.
inline std::optional<GaussianRational> eta_scalar(const SuperOp& phi,
                                                  const Matrix& p,
                                                  const Matrix& a) {
  if (!p.is_square() || p.rows() != phi.n() || !is_rank_one_idempotent(p)) {
    throw NotRankOneIdempotent();
  }
  const Matrix lhs = apply(phi, a) + p;
  const Matrix rhs = a + p;
  const GaussianRational* pivot = first_nonzero_colmajor(rhs);
  if (pivot == nullptr) {
    if (lhs.is_zero()) return GaussianRational(1);
    return std::nullopt;
  }
  const std::ptrdiff_t offset = pivot - rhs.entries().data();
  const GaussianRational eta = lhs.entries()[offset] / *pivot;
  if (eta * rhs != lhs) return std::nullopt;
  return eta;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

enum class FormTag {
  kIdentity,
  kSimilarity,           // A ↦ λ S A S^{-1}
  kTransposeSimilarity,  // A ↦ λ S A^T S^{-1}
  kUnstructured,
};

struct Classification {
  FormTag tag = FormTag::kUnstructured;
  std::optional<Matrix> s;  // gauge-normalized; structured tags only
  std::optional<GaussianRational> lambda;
};

namespace detail {

/// Recovers (S, λ) from L = λ (S^{-1})^T ⊗ S via realignment, or nullopt.
inline std::optional<std::pair<Matrix, GaussianRational>> recover_similarity(
    const Matrix& l, std::size_t n) {
  const Matrix m = realign(l, n);
  if (rank(m) != 1) return std::nullopt;
  const RankOneFactors uv = rank_one_factor(m);
  const Matrix s = unvec(uv.u, n);
  const Matrix t = unvec(uv.v, n);
  if (!is_invertible(s)) return std::nullopt;
  // Φ(A) = S A T; a similarity needs T S = λ I.
  const Matrix ts = t * s;
  GaussianRational lambda = ts(0, 0);
  if (lambda.is_zero() || ts != lambda * Matrix::identity(n)) {
    return std::nullopt;
  }
  return std::make_pair(s, std::move(lambda));
}

}  // namespace detail

/// Sorts Φ into identity, λ-similarity, λ-transpose-similarity or
/// unstructured. Structured results reproduce L exactly, which is the same
/// as reproducing Φ on every matrix unit.
inline Classification classify(const SuperOp& phi) {
  const std::size_t n = phi.n();
  const Matrix& l = phi.matrix();
  if (l == Matrix::identity(n * n)) {
    return {FormTag::kIdentity, std::nullopt, std::nullopt};
  }
  if (auto rec = detail::recover_similarity(l, n)) {
    if (similarity_superop(rec->first, rec->second).matrix() == l) {
      return {FormTag::kSimilarity, std::move(rec->first),
              std::move(rec->second)};
    }
  }
  if (auto rec = detail::recover_similarity(l * commutation_matrix(n), n)) {
    if (transpose_similarity_superop(rec->first, rec->second).matrix() == l) {
      return {FormTag::kTransposeSimilarity, std::move(rec->first),
              std::move(rec->second)};
    }
  }
  return {};
}

inline const char* to_string(FormTag tag) {
  switch (tag) {
    case FormTag::kIdentity: return "Identity";
    case FormTag::kSimilarity: return "SimilarityType";
    case FormTag::kTransposeSimilarity: return "TransposeSimilarityType";
    case FormTag::kUnstructured: return "Unstructured";
  }
  return "Unstructured";
}

// ---------------------------------------------------------------------------
// Lemma-level diagnostics
// ---------------------------------------------------------------------------

/// Φ^{-1} as a superoperator. Throws SingularMatrix when Φ is not bijective.
inline SuperOp inverse_superop(const SuperOp& phi) {
  return SuperOp(phi.n(), inverse(phi.matrix()));
}

/// Φ(P) is again a rank-one idempotent.
inline bool maps_to_rank_one_idempotent(const SuperOp& phi, const Matrix& p) {
  return is_rank_one_idempotent(apply(phi, p));
}

/// Φ(P), Φ(Q) are orthogonal.
inline bool maps_to_orthogonal_pair(const SuperOp& phi, const Matrix& p,
                                    const Matrix& q) {
  return are_orthogonal(apply(phi, p), apply(phi, q));
}

// ---------------------------------------------------------------------------
// Theorem harnesses
// ---------------------------------------------------------------------------

struct DiscrepantEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  GaussianRational value;  // L(row, col); the identity has 1 on the diagonal
};

/// Set-preserver harness: a map keeping every F(A) must be the identity.
struct Theorem11Report {
  enum class Status {
    kConsistent,          // condition holds on probes and Φ = id
    kHypothesisFails,     // condition counterexample found
    kViolationCandidate,  // condition holds on probes yet Φ != id
  };
  Status status = Status::kHypothesisFails;
  Verdict condition;
  std::optional<DiscrepantEntry> discrepancy;
  std::vector<std::string> notes;
};

inline Theorem11Report theorem11_verdict(const SuperOp& phi,
                                         std::size_t trials,
                                         std::uint64_t seed) {
  Theorem11Report report;
  report.condition = check_condition1(phi, trials, seed);
  if (!report.condition.passed()) {
    report.status = Theorem11Report::Status::kHypothesisFails;
    report.notes.emplace_back(
        "hypothesis fails: F(A) != F(phi(A)) at the reported witness");
    return report;
  }
  const std::size_t side = phi.n() * phi.n();
  const Matrix& l = phi.matrix();
  for (std::size_t r = 0; r < side && !report.discrepancy; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      const bool expected_one = r == c;
      if ((expected_one && !l(r, c).is_one()) ||
          (!expected_one && !l(r, c).is_zero())) {
        report.discrepancy = DiscrepantEntry{r, c, l(r, c)};
        break;
      }
    }
  }
  if (report.discrepancy) {
    report.status = Theorem11Report::Status::kViolationCandidate;
    report.notes.emplace_back(
        "fixed sets agree on every probe but phi != id: the probe suite "
        "missed a witness");
  } else {
    report.status = Theorem11Report::Status::kConsistent;
    report.notes.emplace_back(
        "consistent: fixed sets agree on all probes and phi is the identity");
  }
  return report;
}

/// Dimension-preserver harness.
struct Theorem12Report {
  enum class Status {
    kHypothesisNotMet,    // Φ not bijective
    kConditionFails,      // dim F counterexample found
    kConsistent,          // condition holds on probes, Φ = S·S^{-1}
    kOutsideStatedForm,   // condition holds on probes, other form
  };
  Status status = Status::kHypothesisNotMet;
  bool bijective = false;
  bool small_n = false;  // n < 3
  std::optional<Verdict> condition;
  std::optional<Classification> classification;
  /// Φ classified as A ↦ -S A S^{-1}, which cannot preserve dim F.
  bool negated_similarity_unrealizable = false;
  std::vector<std::string> notes;
};

inline Theorem12Report theorem12_verdict(const SuperOp& phi,
                                         std::size_t trials,
                                         std::uint64_t seed) {
  Theorem12Report report;
  report.small_n = phi.n() < 3;
  if (report.small_n) {
    report.notes.emplace_back(
        "warning: n < 3, outside the range where the classification is "
        "claimed");
  }
  report.bijective = is_bijective(phi);
  if (!report.bijective) {
    report.status = Theorem12Report::Status::kHypothesisNotMet;
    report.notes.emplace_back(
        "hypothesis not met: phi is not a surjective linear map");
    return report;
  }

  report.condition = check_condition2(phi, trials, seed);
  report.classification = classify(phi);
  const Classification& cls = *report.classification;
  const bool is_similarity = cls.tag == FormTag::kSimilarity;
  const bool is_identity = cls.tag == FormTag::kIdentity;

  if (is_similarity && *cls.lambda == GaussianRational(-1)) {
    report.negated_similarity_unrealizable = true;
    report.notes.emplace_back(
        "phi = -S A S^-1: this form is not realizable as a dim F preserver "
        "(A = -I gives dim F = 0 but phi(-I) = I has dim F = n)");
  } else if (is_similarity && !cls.lambda->is_one()) {
    report.notes.emplace_back("discrepancy: scaled similarity with lambda = " +
                              cls.lambda->to_string() +
                              "; only lambda = 1 is expected");
  }
  if (cls.tag == FormTag::kTransposeSimilarity) {
    report.notes.emplace_back(
        "form outside the stated conclusion: A -> lambda S A^T S^-1");
  }

  if (!report.condition->passed()) {
    report.status = Theorem12Report::Status::kConditionFails;
    report.notes.emplace_back(
        "condition fails: dim F(A) != dim F(phi(A)) at the reported witness");
  } else if (is_identity || (is_similarity && cls.lambda->is_one())) {
    report.status = Theorem12Report::Status::kConsistent;
    report.notes.emplace_back("consistent: phi(A) = S A S^-1");
  } else {
    report.status = Theorem12Report::Status::kOutsideStatedForm;
    if (cls.tag == FormTag::kUnstructured) {
      report.notes.emplace_back(
          "form outside the stated conclusion: no similarity structure "
          "recovered although dim F agreed on every probe");
    }
  }
  return report;
}

}  // namespace fixpt

#endif  // FIXPT_PRESERVER_HPP
