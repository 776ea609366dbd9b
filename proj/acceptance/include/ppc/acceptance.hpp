#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace ppc::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  /// Runtime ceiling; exceeding it fails the criterion.
  double budget_seconds = 0;
  /// Multi-line findings (counts, tightest margins, reported values).
  std::vector<std::string> details;
};

struct Options {
  std::uint64_t seed = 0x5eed2024;
  unsigned threads = 1;
};

CriterionResult brute_force_equivalence(const Options& options);
CriterionResult derangement_oracle(const Options& options);
CriterionResult avoidance_bound_sweep(const Options& options);
CriterionResult prime_inequality_grids(const Options& options);
CriterionResult r2_reproduction(const Options& options);
CriterionResult headline_bound_properties(const Options& options);
CriterionResult monte_carlo_calibration(const Options& options);
CriterionResult recognizer_harness(const Options& options);

struct Criterion {
  int id;
  std::string title;
  std::function<CriterionResult(const Options&)> run;
};

const std::vector<Criterion>& criteria();

/// Runs every criterion (or only `only` when nonzero), printing one
/// "[PASS]/[FAIL]" line per criterion plus indented details to `out`.
/// Returns true iff all run criteria pass.
bool run_all(const Options& options, std::ostream& out, int only = 0);

}  // namespace ppc::acceptance
