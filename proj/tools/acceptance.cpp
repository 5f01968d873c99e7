// Runs the acceptance criteria, one line each; exit status 1 if any fails.
#include <cstdio>
#include <optional>

#include "silt/harness.hpp"

using namespace silt::harness;

int main() {
  struct Criterion {
    int number;
    const char* check;
    std::optional<double> limit;  // seconds
  };
  const Criterion criteria[] = {
      {1, "gl_dim", 10.0},
      {2, "end_tilting", 60.0},
      {3, "classification", std::nullopt},
      {4, "bongartz_examples", std::nullopt},
      {5, "closure", 600.0},
      {6, "silting_properties", std::nullopt},
      {7, "reduction_consistency", std::nullopt},
      {8, "oracles", std::nullopt},
  };
  PaperOptions opt;
  int failed = 0;
  for (const auto& cr : criteria) {
    const CheckResult r = run_paper_check(cr.check, opt);
    const bool in_time = !cr.limit || r.seconds < *cr.limit;
    const bool pass = r.status == Status::Pass && in_time;
    failed += !pass;
    std::printf("criterion %d %-22s %s  cases=%d violations=%d time=%.2fs", cr.number, cr.check, pass ? "PASS" : "FAIL",
                r.cases, r.violations, r.seconds);
    if (cr.limit) std::printf(" (limit %.0fs)", *cr.limit);
    std::printf("\n");
    if (!r.witness.empty()) std::printf("    witness: %s\n", r.witness.c_str());
    if (!in_time) std::printf("    over the time limit\n");
  }
  std::printf("%d of 8 criteria passed\n", 8 - failed);
  return failed ? 1 : 0;
}
