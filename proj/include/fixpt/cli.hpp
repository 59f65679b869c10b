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

#ifndef FIXPT_CLI_HPP
#define FIXPT_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "fixpt/errors.hpp"
#include "fixpt/fixed_point.hpp"
#include "fixpt/io.hpp"
#include "fixpt/preserver.hpp"
#include "fixpt/random.hpp"
#include "fixpt/report.hpp"
#include "fixpt/superop.hpp"

namespace fixpt::cli {

enum ExitCode : int {
  kOk = 0,          // passed, classified or computed
  kFound = 1,       // counterexample or hypothesis failure
  kInputError = 2,  // malformed input or arguments
};

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open \"" + path + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Json::parse(buffer.str());
}

inline void write_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write \"" + path + "\"");
  out << doc.dump(2) << '\n';
}

/// Builds one fuzz-campaign superoperator. Families: similarity,
/// neg-similarity, transpose, random.
inline SuperOp fuzz_superop(const std::string& family, std::size_t n,
                            Rng& rng) {
  if (family == "random") {
    return SuperOp(n, random_matrix(rng, n * n, n * n));
  }
  const Matrix s = random_invertible(rng, n);
  if (family == "similarity") return similarity_superop(s, 1);
  if (family == "neg-similarity") return similarity_superop(s, -1);
  if (family == "transpose") return transpose_similarity_superop(s, 1);
  throw InputError("unknown family \"" + family + "\"");
}

struct Options {
  std::string matrix_path;
  std::string superop_path;
  std::string emit_s_path;
  std::string report_path;
  std::string condition = "dim";
  int theorem = 2;
  std::size_t trials = 8;
  std::size_t probe_trials = 4;
  std::uint64_t seed = 0;
  std::size_t n = 3;
  std::string family = "similarity";
};

inline int cmd_fixdim(const Options& opt, std::ostream& out) {
  const Matrix a = matrix_from_json(read_json_file(opt.matrix_path));
  if (!a.is_square()) throw InputError("fixdim needs a square matrix");
  const FixedReport fr = fixed_report(a);
  Json doc = report_header("fixdim", opt.seed, 0);
  doc["n"] = a.rows();
  doc["dim"] = fr.dim;
  doc["rank_of_A"] = fr.rank_of_a;
  doc["fixed_space"] = subspace_to_json(fr.space);
  out << doc.dump(2) << '\n';
  return kOk;
}

inline int cmd_classify(const Options& opt, std::ostream& out) {
  const SuperOp phi = superop_from_json(read_json_file(opt.superop_path));
  const Classification c = classify(phi);
  Json doc = report_header("classify", opt.seed, 0);
  doc["n"] = phi.n();
  doc["classification"] = classification_to_json(c);
  if (!opt.emit_s_path.empty() && c.s) {
    write_json_file(opt.emit_s_path, matrix_to_json(*c.s));
  }
  out << doc.dump(2) << '\n';
  return kOk;
}

inline int cmd_check(const Options& opt, std::ostream& out) {
  const SuperOp phi = superop_from_json(read_json_file(opt.superop_path));
  Verdict v;
  if (opt.condition == "dim") {
    v = check_condition2(phi, opt.trials, opt.seed);
  } else if (opt.condition == "set") {
    v = check_condition1(phi, opt.trials, opt.seed);
  } else {
    throw InputError("--condition must be dim or set");
  }
  Json doc = report_header("check", opt.seed, v.probes_run);
  doc["n"] = phi.n();
  doc["verdict"] = verdict_to_json(v, phi);
  out << doc.dump(2) << '\n';
  return v.passed() ? kOk : kFound;
}

inline int cmd_verdict(const Options& opt, std::ostream& out) {
  const SuperOp phi = superop_from_json(read_json_file(opt.superop_path));
  if (opt.theorem == 1) {
    const Theorem11Report r = theorem11_verdict(phi, opt.trials, opt.seed);
    Json doc = report_header("verdict", opt.seed, r.condition.probes_run);
    doc["theorem"] = 1;
    doc["n"] = phi.n();
    doc["report"] = theorem11_to_json(r, phi);
    out << doc.dump(2) << '\n';
    return r.status == Theorem11Report::Status::kConsistent ? kOk : kFound;
  }
  if (opt.theorem == 2) {
    const Theorem12Report r = theorem12_verdict(phi, opt.trials, opt.seed);
    Json doc = report_header("verdict", opt.seed,
                             r.condition ? r.condition->probes_run : 0);
    doc["theorem"] = 2;
    doc["n"] = phi.n();
    doc["report"] = theorem12_to_json(r, phi);
    out << doc.dump(2) << '\n';
    const bool found = r.status == Theorem12Report::Status::kHypothesisNotMet ||
                       r.status == Theorem12Report::Status::kConditionFails;
    return found ? kFound : kOk;
  }
  throw InputError("--theorem must be 1 or 2");
}

inline int cmd_fuzz(const Options& opt, std::ostream& out) {
  if (opt.n < 1 || opt.n > kMaxSuperopDim) {
    throw InputError(UnsupportedDimension(opt.n).what());
  }
  const Rng base(opt.seed);
  Json trials = Json::array();
  std::size_t counterexamples = 0;
  std::size_t probes_total = 0;
  std::map<std::string, std::size_t> tags;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    Rng rng = base.split(t);
    const SuperOp phi = fuzz_superop(opt.family, opt.n, rng);
    const std::uint64_t probe_seed = rng.next();
    const Verdict v = check_condition2(phi, opt.probe_trials, probe_seed);
    const Classification c = classify(phi);
    probes_total += v.probes_run;
    if (!v.passed()) ++counterexamples;
    ++tags[to_string(c.tag)];
    Json entry;
    entry["trial"] = t;
    entry["verdict"] = verdict_to_json(v, phi);
    entry["classification"] = classification_to_json(c);
    trials.push_back(std::move(entry));
  }
  Json doc = report_header("fuzz", opt.seed, probes_total);
  doc["n"] = opt.n;
  doc["family"] = opt.family;
  doc["trials_run"] = opt.trials;
  doc["counterexamples"] = counterexamples;
  Json tag_counts = Json::object();
  for (const auto& [tag, count] : tags) tag_counts[tag] = count;
  doc["classification_counts"] = std::move(tag_counts);
  doc["trials"] = std::move(trials);
  out << doc.dump(2) << '\n';
  return counterexamples == 0 ? kOk : kFound;
}

/// Exit 0 when every embedded counterexample re-verifies, 1 otherwise.
inline int cmd_verify_report(const Options& opt, std::ostream& out) {
  const VerifySummary s = verify_report(read_json_file(opt.report_path));
  Json doc = report_header("verify-report", opt.seed, 0);
  doc["counterexamples_checked"] = s.checked;
  doc["counterexamples_failed"] = s.failed;
  out << doc.dump(2) << '\n';
  return s.ok() ? kOk : kFound;
}

/// Entry point shared by the executable and the tests. Reports go to `out`,
/// diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Exact fixed-point subspaces and fixed-point preserver checks",
               "fixpt"};
  app.require_subcommand(1);
  Options opt;

  auto* fixdim = app.add_subcommand("fixdim", "dim F(A) and a basis of F(A)");
  fixdim->add_option("--matrix", opt.matrix_path, "matrix JSON file")
      ->required();

  auto* classify_cmd =
      app.add_subcommand("classify", "recover the form of a superoperator");
  classify_cmd->add_option("--superop", opt.superop_path,
                           "superoperator JSON file")
      ->required();
  classify_cmd->add_option("--emit-s", opt.emit_s_path,
                           "write the recovered S as a matrix JSON file");

  auto* check = app.add_subcommand("check", "probe a preserving condition");
  check->add_option("--superop", opt.superop_path, "superoperator JSON file")
      ->required();
  check->add_option("--condition", opt.condition, "dim or set")
      ->required()
      ->check(CLI::IsMember({"dim", "set"}));
  check->add_option("--trials", opt.trials, "random probes after the fixed list");
  check->add_option("--seed", opt.seed, "64-bit seed");

  auto* verdict =
      app.add_subcommand("verdict", "run a theorem harness on a superoperator");
  verdict->add_option("--superop", opt.superop_path, "superoperator JSON file")
      ->required();
  verdict->add_option("--theorem", opt.theorem, "1 (fixed sets) or 2 (dims)")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  verdict->add_option("--trials", opt.trials, "random probes");
  verdict->add_option("--seed", opt.seed, "64-bit seed");

  auto* fuzz = app.add_subcommand("fuzz", "seeded campaign over a map family");
  fuzz->add_option("--n", opt.n, "matrix size")->required();
  fuzz->add_option("--family", opt.family,
                   "similarity, neg-similarity, transpose or random")
      ->required()
      ->check(CLI::IsMember(
          {"similarity", "neg-similarity", "transpose", "random"}));
  fuzz->add_option("--trials", opt.trials, "number of maps")->required();
  fuzz->add_option("--seed", opt.seed, "64-bit seed")->required();
  fuzz->add_option("--probe-trials", opt.probe_trials,
                   "random probes per map");

  auto* verify =
      app.add_subcommand("verify-report", "re-check counterexamples in a report");
  verify->add_option("--report", opt.report_path, "report JSON file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "fixpt: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (fixdim->parsed()) return cmd_fixdim(opt, out);
    if (classify_cmd->parsed()) return cmd_classify(opt, out);
    if (check->parsed()) return cmd_check(opt, out);
    if (verdict->parsed()) return cmd_verdict(opt, out);
    if (fuzz->parsed()) return cmd_fuzz(opt, out);
    if (verify->parsed()) return cmd_verify_report(opt, out);
  } catch (const nlohmann::json::exception& e) {
    err << "fixpt: invalid JSON: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "fixpt: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace fixpt::cli

#endif  // FIXPT_CLI_HPP
