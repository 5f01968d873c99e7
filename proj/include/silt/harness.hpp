#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "silt/algebra.hpp"
#include "silt/classify.hpp"

namespace silt::harness {

enum class Status { Pass, Fail, Info };
std::string to_string(Status s);

struct CheckResult {
  std::string name;
  std::string anchor;     // the statement being checked, as a formula
  Status status = Status::Pass;
  int cases = 0;
  int violations = 0;
  std::string witness;    // first counterexample and a command reproducing it
  std::vector<std::string> log;
  double seconds = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;         // asserted
  std::vector<CheckResult> informational;  // reported, never asserted
  bool ok() const;
  nlohmann::json to_json() const;
};
std::string render_text(const nlohmann::json& report);

/// Families fed to the closure fuzzer: A(n,k) for n <= max_n, then
/// `random_count` linear A_{random_n} algebras with each length-2 path
/// killed with probability kill_probability.
struct CorpusSpec {
  int max_n = 6;
  int random_count = 50;
  int random_n = 6;
  double kill_probability = 1.0 / 3.0;
  std::uint64_t seed = 1;
  int threads = 0;  // 0: hardware concurrency
};

struct CorpusItem {
  std::string name;
  std::string command;   // CLI line regenerating the algebra
  AlgebraPtr algebra;
};
std::vector<CorpusItem> expand_corpus(const CorpusSpec& spec);

VerificationReport closure_fuzz(const CorpusSpec& spec);

struct PaperOptions {
  std::vector<std::string> only;  // check names; empty runs everything
  bool inject_fault = false;      // swap the relation of A(4,3) for a wrong one
  std::uint64_t seed = 1;
  CorpusSpec corpus;
};
const std::vector<std::string>& paper_check_names();
VerificationReport verify_paper(const PaperOptions& opt = {});
/// One check of the suite by name; throws std::out_of_range for unknown names.
CheckResult run_paper_check(const std::string& name, const PaperOptions& opt);

/// Ringel's complete slice in a representation-directed catalog; nullopt if
/// the search over tau-orbit choices exceeds `budget` candidates.
std::optional<bool> has_complete_slice(const IndecCatalog& cat, std::int64_t budget = 1 << 16);

}  // namespace silt::harness
