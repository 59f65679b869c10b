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

#include "fixpt/preserver.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "fixpt/random.hpp"
#include "test_support.hpp"

namespace fixpt {
namespace {

using test::e;
using test::gr;
using test::q;
using test::unit;

Matrix random_non_scalar_invertible(Rng& rng, std::size_t n) {
  Matrix s = random_invertible(rng, n);
  while (s == s(0, 0) * Matrix::identity(n)) s = random_invertible(rng, n);
  return s;
}

// ---------------------------------------------------------------------------
// probe_suite
// ---------------------------------------------------------------------------

TEST(ProbeSuiteTest, StructuredPrefix) {
  const std::vector<Matrix> probes = probe_suite(3, 0, 42);
  ASSERT_EQ(probes.size(), 9u);
  EXPECT_EQ(structured_probe_count(3), 9u);
  EXPECT_EQ(dim_fixed(probes[0]), 0u);
  EXPECT_EQ(dim_fixed(probes[1]), 0u);  // -I
  EXPECT_EQ(dim_fixed(probes[2]), 3u);  // I
  EXPECT_EQ(probes[3], unit(3, 0, 0));
  EXPECT_EQ(probes[4], unit(3, 0, 0) + unit(3, 1, 1));
  EXPECT_EQ(probes[5], unit(3, 0, 1));
  EXPECT_EQ(dim_fixed(probes[6]), 1u);  // J_3(1)
  EXPECT_TRUE(is_rank_one_idempotent(probes[7]));
  EXPECT_EQ(rank(probes[8]), 1u);
  EXPECT_FALSE(is_idempotent(probes[8]));
}

TEST(ProbeSuiteTest, PartialSumsPinEveryDimension) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const std::vector<Matrix> probes = probe_suite(n, 0, 0);
    std::vector<bool> seen(n + 1, false);
    for (std::size_t k = 1; k < n; ++k) {
      EXPECT_EQ(dim_fixed(probes[2 + k]), k);
    }
    for (const Matrix& p : probes) seen[dim_fixed(p)] = true;
    for (std::size_t d = 0; d <= n; ++d) EXPECT_TRUE(seen[d]) << "dim " << d;
  }
}

TEST(ProbeSuiteTest, Deterministic) {
  EXPECT_EQ(probe_suite(4, 10, 9), probe_suite(4, 10, 9));
  const auto a = probe_suite(4, 3, 1);
  const auto b = probe_suite(4, 3, 2);
  EXPECT_NE(a, b);
  // Random probes come from per-index streams: extending the list keeps the
  // existing probes.
  const auto longer = probe_suite(4, 5, 1);
  EXPECT_TRUE(std::equal(a.begin(), a.end(), longer.begin()));
}

TEST(ProbeSuiteTest, SizeOne) {
  const std::vector<Matrix> probes = probe_suite(1, 2, 0);
  EXPECT_EQ(probes.size(), structured_probe_count(1) + 2);
  EXPECT_EQ(structured_probe_count(1), 6u);
}

// ---------------------------------------------------------------------------
// condition checkers
// ---------------------------------------------------------------------------

TEST(CheckCondition2Test, SimilarityPasses) {
  Rng rng(1);
  for (int k = 0; k < 10; ++k) {
    const Matrix s = random_invertible(rng, 3);
    const SuperOp phi = similarity_superop(s, 1);
    const Verdict v = check_condition2(phi, 5, 7);
    EXPECT_TRUE(v.passed());
    EXPECT_EQ(v.probes_run, structured_probe_count(3) + 5);
    EXPECT_EQ(v.seed, 7u);
    for (const Matrix& a : probe_suite(3, 5, 7)) {
      EXPECT_EQ(dim_fixed(a), dim_fixed(s * a * inverse(s)));
    }
  }
}

TEST(CheckCondition2Test, NegationFailsAtMinusIdentity) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const Verdict v =
        check_condition2(similarity_superop(Matrix::identity(n), -1), 3, 0);
    ASSERT_FALSE(v.passed());
    EXPECT_EQ(*v.witness, -Matrix::identity(n));
    EXPECT_EQ(*v.witness_index, 1u);
    EXPECT_EQ(v.dims->first, 0u);
    EXPECT_EQ(v.dims->second, n);
    EXPECT_EQ(v.probes_run, 2u);
  }
}

TEST(CheckCondition2Test, TransposeSimilarityPasses) {
  Rng rng(2);
  for (int k = 0; k < 10; ++k) {
    const Matrix s = random_invertible(rng, 3);
    EXPECT_TRUE(
        check_condition2(transpose_similarity_superop(s, 1), 5, k).passed());
    for (const Matrix& a : probe_suite(3, 5, k)) {
      EXPECT_EQ(dim_fixed(a), dim_fixed(a.transpose()));
    }
  }
}

TEST(CheckCondition1Test, IdentityPasses) {
  const Verdict v = check_condition1(identity_superop(4), 6, 3);
  EXPECT_TRUE(v.passed());
  EXPECT_EQ(v.condition, Condition::kFixedSet);
  EXPECT_EQ(v.probes_run, structured_probe_count(4) + 6);
}

TEST(CheckCondition1Test, TransposeFails) {
  const Matrix a = Matrix::identity(3) + unit(3, 0, 1);
  // F(I + E_12) = {x_2 = 0}, F(I + E_21) = {x_1 = 0}.
  EXPECT_EQ(fixed_space(a), Subspace::span(hstack(e(3, 0), e(3, 2))));
  EXPECT_EQ(fixed_space(a.transpose()),
            Subspace::span(hstack(e(3, 1), e(3, 2))));

  const Verdict v = check_condition1(transpose_superop(3), 0, 0);
  ASSERT_FALSE(v.passed());
  EXPECT_FALSE(subspace_equal(v.spaces->first, v.spaces->second));
  EXPECT_EQ(v.spaces->first, fixed_space(*v.witness));
  EXPECT_EQ(v.spaces->second, fixed_space(v.witness->transpose()));
}

TEST(CheckCondition1Test, NonScalarSimilarityMovesARankOneIdempotent) {
  // x = (1,1,1) is not an eigenvector of S, so F(S P S^-1) = span{Sx}.
  const Matrix s{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  const Matrix x = Matrix::column({1, 1, 1});
  const Matrix p = rank_one(x, e(3, 0).transpose());
  EXPECT_EQ(fixed_space(s * p * inverse(s)), Subspace::span(s * x));
  EXPECT_NE(Subspace::span(s * x), Subspace::span(x));

  const Verdict v = check_condition1(similarity_superop(s, 1), 0, 0);
  ASSERT_FALSE(v.passed());
  EXPECT_LT(*v.witness_index, structured_probe_count(3));
}

// Counterexamples re-derive exactly from (Φ, witness).
TEST(CheckConditionTest, CounterexamplesReverify) {
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    const SuperOp phi(3, random_matrix(rng, 9, 9));
    const Verdict v2 = check_condition2(phi, 4, k);
    if (!v2.passed()) {
      const Matrix image = apply(phi, *v2.witness);
      EXPECT_EQ(dim_fixed(*v2.witness), v2.dims->first);
      EXPECT_EQ(dim_fixed(image), v2.dims->second);
      EXPECT_NE(v2.dims->first, v2.dims->second);
    }
    const Verdict v1 = check_condition1(phi, 4, k);
    ASSERT_FALSE(v1.passed());
    EXPECT_FALSE(subspace_equal(fixed_space(*v1.witness),
                                fixed_space(apply(phi, *v1.witness))));
  }
}

// ---------------------------------------------------------------------------
// eta_scalar
// ---------------------------------------------------------------------------

TEST(EtaScalarTest, IdentityGivesOne) {
  Rng rng(4);
  const SuperOp id = identity_superop(3);
  for (int k = 0; k < 20; ++k) {
    const Matrix b = random_invertible(rng, 3);
    const Matrix p = b * unit(3, 0, 0) * inverse(b);
    const Matrix a = random_matrix(rng, 3, 3);
    const auto eta = eta_scalar(id, p, a);
    ASSERT_TRUE(eta.has_value());
    EXPECT_TRUE(eta->is_one());
  }
}

TEST(EtaScalarTest, DoublingMap) {
  const SuperOp doubling = similarity_superop(Matrix::identity(3), 2);
  const Matrix p = unit(3, 0, 0);
  EXPECT_EQ(eta_scalar(doubling, p, p), q(3, 2));
}

TEST(EtaScalarTest, TransposeNotProportional) {
  EXPECT_FALSE(
      eta_scalar(transpose_superop(3), unit(3, 0, 0), unit(3, 0, 1)).has_value());
}

TEST(EtaScalarTest, BothSidesZero) {
  const Matrix p = unit(3, 0, 0);
  EXPECT_EQ(eta_scalar(identity_superop(3), p, -p), gr(1));
  EXPECT_FALSE(eta_scalar(similarity_superop(Matrix::identity(3), 2), p, -p)
                   .has_value());
}

TEST(EtaScalarTest, RejectsNonIdempotent) {
  EXPECT_THROW(eta_scalar(identity_superop(3), unit(3, 0, 1), unit(3, 0, 0)),
               NotRankOneIdempotent);
  EXPECT_THROW(eta_scalar(identity_superop(3), Matrix::identity(3),
                          unit(3, 0, 0)),
               NotRankOneIdempotent);
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

TEST(ClassifyTest, Identity) {
  const Classification c = classify(identity_superop(3));
  EXPECT_EQ(c.tag, FormTag::kIdentity);
  EXPECT_FALSE(c.s.has_value());
}

TEST(ClassifyTest, TransposeMap) {
  const Classification c = classify(transpose_superop(3));
  ASSERT_EQ(c.tag, FormTag::kTransposeSimilarity);
  EXPECT_EQ(*c.s, Matrix::identity(3));
  EXPECT_TRUE(c.lambda->is_one());
}

TEST(ClassifyTest, RecoversSimilarityUpToScale) {
  Rng rng(5);
  for (std::size_t n : {3u, 4u}) {
    for (int k = 0; k < 25; ++k) {
      const Matrix s0 = random_non_scalar_invertible(rng, n);
      const Classification c = classify(similarity_superop(s0, 1));
      ASSERT_EQ(c.tag, FormTag::kSimilarity);
      EXPECT_TRUE(c.lambda->is_one());
      EXPECT_EQ(*c.s, gauge_normalize(s0));
      EXPECT_TRUE(first_nonzero_colmajor(*c.s)->is_one());
    }
  }
}

TEST(ClassifyTest, GaugeStable) {
  Rng rng(6);
  const Matrix s = random_non_scalar_invertible(rng, 3);
  const Classification base = classify(similarity_superop(s, -1));
  ASSERT_EQ(base.tag, FormTag::kSimilarity);
  EXPECT_EQ(*base.lambda, gr(-1));
  for (const GaussianRational& c : {gr(2), gr(0, 1), q(-3, 7), gr(1, -5)}) {
    const Classification scaled = classify(similarity_superop(c * s, -1));
    ASSERT_EQ(scaled.tag, FormTag::kSimilarity);
    EXPECT_EQ(*scaled.s, *base.s);
    EXPECT_EQ(*scaled.lambda, gr(-1));
  }
}

TEST(ClassifyTest, RoundTripBothFamilies) {
  Rng rng(7);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    const Matrix s = random_non_scalar_invertible(rng, n);
    GaussianRational lambda = random_scalar(rng);
    if (lambda.is_zero()) lambda = gr(1);

    const SuperOp sim = similarity_superop(s, lambda);
    const Classification cs = classify(sim);
    ASSERT_EQ(cs.tag, FormTag::kSimilarity);
    EXPECT_EQ(*cs.lambda, lambda);
    EXPECT_EQ(similarity_superop(*cs.s, *cs.lambda), sim);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Matrix u = unit(n, i, j);
        EXPECT_EQ(apply(sim, u), lambda * (*cs.s) * u * inverse(*cs.s));
      }
    }

    const SuperOp tr = transpose_similarity_superop(s, lambda);
    const Classification ct = classify(tr);
    ASSERT_EQ(ct.tag, FormTag::kTransposeSimilarity);
    EXPECT_EQ(*ct.lambda, lambda);
    EXPECT_EQ(*ct.s, gauge_normalize(s));
    EXPECT_EQ(transpose_similarity_superop(*ct.s, *ct.lambda), tr);
  }
}

TEST(ClassifyTest, UnstructuredMaps) {
  Rng rng(8);
  EXPECT_EQ(classify(SuperOp(3, random_matrix(rng, 9, 9))).tag,
            FormTag::kUnstructured);
  // A ↦ S A T with T S not scalar realigns to rank one but is rejected.
  const Matrix s = Matrix::diagonal({1, 2, 3});
  const SuperOp sat =
      superop_from_map(3, [&](const Matrix& a) { return s * a * s; });
  EXPECT_EQ(rank(realign(sat)), 1u);
  EXPECT_EQ(classify(sat).tag, FormTag::kUnstructured);
  // Singular S.
  const Matrix corner = unit(3, 0, 0);
  EXPECT_EQ(classify(superop_from_map(3, [&](const Matrix& a) {
              return corner * a * corner;
            })).tag,
            FormTag::kUnstructured);
  EXPECT_EQ(classify(SuperOp(2, Matrix::zeros(4, 4))).tag,
            FormTag::kUnstructured);
}

// ---------------------------------------------------------------------------
// Lemma-level behaviour of similarity maps
// ---------------------------------------------------------------------------

TEST(LemmaDiagnosticsTest, SimilarityPreservesIdempotentsAndOrthogonality) {
  Rng rng(9);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(3, 4));
    const SuperOp phi = similarity_superop(random_invertible(rng, n), 1);
    const SuperOp phi_inv = inverse_superop(phi);
    const Matrix b = random_invertible(rng, n);
    const Matrix b_inv = inverse(b);
    const Matrix p = b * unit(n, 0, 0) * b_inv;
    const Matrix q = b * unit(n, 1, 1) * b_inv;
    EXPECT_TRUE(maps_to_rank_one_idempotent(phi, p));
    EXPECT_TRUE(maps_to_orthogonal_pair(phi, p, q));
    EXPECT_EQ(dim_fixed(apply(phi, p) + apply(phi, q)), 2u);
    // Backward direction through the inverse map.
    EXPECT_TRUE(maps_to_rank_one_idempotent(phi_inv, p));
    EXPECT_TRUE(maps_to_orthogonal_pair(phi_inv, p, q));
    EXPECT_EQ(apply(phi_inv, apply(phi, p)), p);
  }
}

TEST(LemmaDiagnosticsTest, SetPreserverFixesIdentityAndIdempotents) {
  const SuperOp id = identity_superop(3);
  ASSERT_TRUE(check_condition1(id, 4, 0).passed());
  EXPECT_EQ(apply(id, Matrix::identity(3)), Matrix::identity(3));
  for (const Matrix& a : probe_suite(3, 4, 0)) {
    if (is_rank_one_idempotent(a)) {
      EXPECT_EQ(apply(id, a), a);
    }
  }
}

TEST(LemmaDiagnosticsTest, InverseSuperOpOfSingularMapThrows) {
  EXPECT_THROW(inverse_superop(SuperOp(2, Matrix::zeros(4, 4))),
               SingularMatrix);
}

// ---------------------------------------------------------------------------
// Theorem harnesses
// ---------------------------------------------------------------------------

TEST(Theorem11Test, IdentityIsConsistent) {
  const Theorem11Report r = theorem11_verdict(identity_superop(3), 4, 1);
  EXPECT_EQ(r.status, Theorem11Report::Status::kConsistent);
  EXPECT_TRUE(r.condition.passed());
  EXPECT_FALSE(r.discrepancy.has_value());
}

TEST(Theorem11Test, PerturbedIdentityFails) {
  Rng rng(10);
  for (int k = 0; k < 10; ++k) {
    const Matrix u = random_nonzero_vector(rng, 9);
    const Matrix v = random_nonzero_vector(rng, 9);
    const SuperOp phi(3, Matrix::identity(9) + u * v.transpose());
    const Theorem11Report r = theorem11_verdict(phi, 0, 0);
    EXPECT_EQ(r.status, Theorem11Report::Status::kHypothesisFails);
  }
}

TEST(Theorem11Test, NonScalarSimilarityFails) {
  const Matrix s{{2, 1, 0}, {0, 1, 0}, {1, 0, 1}};
  const Theorem11Report r = theorem11_verdict(similarity_superop(s, 1), 0, 0);
  EXPECT_EQ(r.status, Theorem11Report::Status::kHypothesisFails);
  ASSERT_TRUE(r.condition.witness.has_value());
}

// Doubling the (0, 1) entry keeps F on every structured probe (E_12 and
// J_n(1) keep their fixed spaces) although the map is not the identity.
TEST(Theorem11Test, ViolationCandidateWhenProbesMiss) {
  for (std::size_t n : {2u, 3u}) {
    const SuperOp phi = superop_from_map(n, [](Matrix a) {
      a(0, 1) *= 2;
      return a;
    });
    const Theorem11Report r = theorem11_verdict(phi, 0, 0);
    EXPECT_EQ(r.status, Theorem11Report::Status::kViolationCandidate);
    ASSERT_TRUE(r.discrepancy.has_value());
    EXPECT_EQ(r.discrepancy->row, n);
    EXPECT_EQ(r.discrepancy->col, n);
    EXPECT_EQ(r.discrepancy->value, gr(2));
  }
}

TEST(Theorem12Test, SimilarityConsistent) {
  Rng rng(11);
  const Matrix s = random_non_scalar_invertible(rng, 3);
  const Theorem12Report r = theorem12_verdict(similarity_superop(s, 1), 4, 0);
  EXPECT_EQ(r.status, Theorem12Report::Status::kConsistent);
  ASSERT_TRUE(r.classification.has_value());
  EXPECT_EQ(r.classification->tag, FormTag::kSimilarity);
  EXPECT_FALSE(r.small_n);
}

TEST(Theorem12Test, NegatedSimilarityFlagged) {
  Rng rng(12);
  const Matrix s = random_non_scalar_invertible(rng, 4);
  const Theorem12Report r = theorem12_verdict(similarity_superop(s, -1), 4, 0);
  EXPECT_EQ(r.status, Theorem12Report::Status::kConditionFails);
  EXPECT_TRUE(r.negated_similarity_unrealizable);
  EXPECT_EQ(*r.condition->witness, -Matrix::identity(4));
  EXPECT_EQ(*r.condition->dims, std::make_pair(std::size_t{0}, std::size_t{4}));
}

TEST(Theorem12Test, TransposeOutsideStatedForm) {
  Rng rng(13);
  const Matrix s = random_invertible(rng, 3);
  const Theorem12Report r =
      theorem12_verdict(transpose_similarity_superop(s, 1), 4, 0);
  EXPECT_EQ(r.status, Theorem12Report::Status::kOutsideStatedForm);
  EXPECT_TRUE(r.condition->passed());
  EXPECT_EQ(r.classification->tag, FormTag::kTransposeSimilarity);
}

TEST(Theorem12Test, NonBijectiveMapRejected) {
  const Theorem12Report r = theorem12_verdict(SuperOp(3, Matrix::zeros(9, 9)), 4, 0);
  EXPECT_EQ(r.status, Theorem12Report::Status::kHypothesisNotMet);
  EXPECT_FALSE(r.bijective);
  EXPECT_FALSE(r.condition.has_value());
}

TEST(Theorem12Test, SmallNWarning) {
  const Theorem12Report r = theorem12_verdict(identity_superop(2), 0, 0);
  EXPECT_TRUE(r.small_n);
  EXPECT_EQ(r.status, Theorem12Report::Status::kConsistent);
}

TEST(Theorem12Test, ScaledSimilarityNoted) {
  const Theorem12Report r =
      theorem12_verdict(similarity_superop(Matrix::identity(3), 2), 0, 0);
  EXPECT_EQ(r.status, Theorem12Report::Status::kConditionFails);
  ASSERT_EQ(r.classification->tag, FormTag::kSimilarity);
  EXPECT_EQ(*r.classification->lambda, gr(2));
  EXPECT_FALSE(r.negated_similarity_unrealizable);
}

}  // namespace
}  // namespace fixpt
