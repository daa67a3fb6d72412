#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace logsob {

struct AcceptanceSettings {
  std::uint64_t seed = 42;
  int n_override = 0;         // force a grid size; small grids skip
                              // resolution-sensitive criteria
  bool quick = false;         // reduced sizes (used by the determinism check)
  std::string output_dir;     // empty = no artifacts written
  bool deterministic = true;  // fixed timestamps in artifacts
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool skipped = false;  // too coarse to judge at the forced grid size
  std::vector<std::string> detail;
};

inline constexpr int kCriterionCount = 13;

CriterionResult run_criterion(int id, const AcceptanceSettings& settings);
std::vector<CriterionResult> run_all_criteria(const AcceptanceSettings& settings);

// One line per criterion plus a summary; returns the number of failures.
int print_criteria(const std::vector<CriterionResult>& results);

}  // namespace logsob
