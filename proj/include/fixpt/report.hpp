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

#ifndef FIXPT_REPORT_HPP
#define FIXPT_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

#include "fixpt/fixed_point.hpp"
#include "fixpt/io.hpp"
#include "fixpt/preserver.hpp"
#include "fixpt/superop.hpp"

namespace fixpt {

inline constexpr const char* kToolVersion = "0.1.0";

inline const char* condition_name(Condition c) {
  return c == Condition::kFixedDim ? "dim" : "set";
}

/// Report skeleton shared by every command; payload fields follow.
inline Json report_header(const std::string& command, std::uint64_t seed,
                          std::size_t probes_run) {
  Json doc;
  doc["command"] = command;
  doc["tool_version"] = kToolVersion;
  doc["seed"] = seed;
  doc["probes_run"] = probes_run;
  return doc;
}

/// A counterexample verdict carries the superoperator, the witness and its
/// image, so it can be re-checked from the JSON alone.
inline Json verdict_to_json(const Verdict& v, const SuperOp& phi) {
  Json doc;
  doc["condition"] = condition_name(v.condition);
  doc["outcome"] = v.passed() ? "pass" : "counterexample";
  doc["probes_run"] = v.probes_run;
  doc["seed"] = v.seed;
  if (v.passed()) return doc;

  doc["witness_index"] = *v.witness_index;
  doc["witness"] = matrix_to_json(*v.witness);
  doc["image"] = matrix_to_json(apply(phi, *v.witness));
  Json detail;
  if (v.condition == Condition::kFixedDim) {
    detail["dim_A"] = v.dims->first;
    detail["dim_phi_A"] = v.dims->second;
  } else {
    detail["fixed_A"] = subspace_to_json(v.spaces->first);
    detail["fixed_phi_A"] = subspace_to_json(v.spaces->second);
  }
  doc["detail"] = std::move(detail);
  doc["superop"] = superop_to_json(phi);
  return doc;
}

inline Json classification_to_json(const Classification& c) {
  Json doc;
  doc["tag"] = to_string(c.tag);
  if (c.s) doc["S"] = matrix_to_json(*c.s);
  if (c.lambda) doc["lambda"] = c.lambda->to_string();
  return doc;
}

inline const char* to_string(Theorem11Report::Status s) {
  switch (s) {
    case Theorem11Report::Status::kConsistent: return "consistent";
    case Theorem11Report::Status::kHypothesisFails: return "hypothesis_fails";
    case Theorem11Report::Status::kViolationCandidate:
      return "violation_candidate";
  }
  return "hypothesis_fails";
}

inline const char* to_string(Theorem12Report::Status s) {
  switch (s) {
    case Theorem12Report::Status::kHypothesisNotMet:
      return "hypothesis_not_met";
    case Theorem12Report::Status::kConditionFails: return "condition_fails";
    case Theorem12Report::Status::kConsistent: return "consistent";
    case Theorem12Report::Status::kOutsideStatedForm:
      return "outside_stated_form";
  }
  return "hypothesis_not_met";
}

inline Json theorem11_to_json(const Theorem11Report& r, const SuperOp& phi) {
  Json doc;
  doc["status"] = to_string(r.status);
  doc["condition"] = verdict_to_json(r.condition, phi);
  if (r.discrepancy) {
    Json d;
    d["row"] = r.discrepancy->row;
    d["col"] = r.discrepancy->col;
    d["value"] = r.discrepancy->value.to_string();
    doc["discrepancy"] = std::move(d);
  }
  doc["notes"] = r.notes;
  return doc;
}

inline Json theorem12_to_json(const Theorem12Report& r, const SuperOp& phi) {
  Json doc;
  doc["status"] = to_string(r.status);
  doc["bijective"] = r.bijective;
  doc["small_n_warning"] = r.small_n;
  if (r.condition) doc["condition"] = verdict_to_json(*r.condition, phi);
  if (r.classification) {
    doc["classification"] = classification_to_json(*r.classification);
  }
  doc["negated_similarity_unrealizable"] = r.negated_similarity_unrealizable;
  doc["notes"] = r.notes;
  return doc;
}

// ---------------------------------------------------------------------------
// Self-verification
// ---------------------------------------------------------------------------

/// Re-derives a counterexample verdict from its own payload: the image must
/// equal Φ(witness) and the recomputed fixed-point data must reproduce the
/// recorded detail exactly and actually differ.
inline bool verify_counterexample(const Json& verdict) {
  const SuperOp phi = superop_from_json(verdict.at("superop"));
  const Matrix witness = matrix_from_json(verdict.at("witness"));
  const Matrix image = apply(phi, witness);
  if (image != matrix_from_json(verdict.at("image"))) return false;
  const Json& detail = verdict.at("detail");
  const std::string condition = verdict.at("condition").get<std::string>();
  if (condition == "dim") {
    const std::size_t lhs = dim_fixed(witness);
    const std::size_t rhs = dim_fixed(image);
    return lhs != rhs && detail.at("dim_A").get<std::size_t>() == lhs &&
           detail.at("dim_phi_A").get<std::size_t>() == rhs;
  }
  if (condition == "set") {
    const Subspace lhs = fixed_space(witness);
    const Subspace rhs = fixed_space(image);
    return !subspace_equal(lhs, rhs) &&
           subspace_to_json(lhs) == detail.at("fixed_A") &&
           subspace_to_json(rhs) == detail.at("fixed_phi_A");
  }
  return false;
}

struct VerifySummary {
  std::size_t checked = 0;
  std::size_t failed = 0;
  bool ok() const noexcept { return failed == 0; }
};

namespace detail {

inline void verify_walk(const Json& node, VerifySummary& summary) {
  if (node.is_object()) {
    const auto outcome = node.find("outcome");
    if (outcome != node.end() && *outcome == "counterexample") {
      ++summary.checked;
      bool good = false;
      try {
        good = verify_counterexample(node);
      } catch (const std::exception&) {
        good = false;
      }
      if (!good) ++summary.failed;
    }
    for (const auto& [key, child] : node.items()) verify_walk(child, summary);
  } else if (node.is_array()) {
    for (const auto& child : node) verify_walk(child, summary);
  }
}

}  // namespace detail

/// Re-checks every counterexample found anywhere inside a report.
inline VerifySummary verify_report(const Json& report) {
  VerifySummary summary;
  detail::verify_walk(report, summary);
  return summary;
}

}  // namespace fixpt

#endif  // FIXPT_REPORT_HPP
