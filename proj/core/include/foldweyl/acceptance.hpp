#pragma once

// The acceptance suite: numbered criteria, each a list of named checks.
//
// Quick runs the A1/A2/A3 instances.  Full adds the D4 rows (both twists),
// the E6 folding and the oracle builds that back the D4 and E6 table entries.

#include <functional>
#include <string>
#include <vector>

namespace foldweyl {

enum class Level { Quick, Full };

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  Level level = Level::Quick;
  // Corrupts one structure constant of the algebra used by the Jacobi check.
  bool inject_jacobi_fault = false;
  // A check running longer than this many seconds is recorded as failed.
  // Zero means no budget.
  double check_budget = 0;
  // Restricts the run to these criteria (all when empty).  Criterion 8
  // checks the oracle builds of whichever of 5-7 ran before it.
  std::vector<int> only;
  // Called after every check.
  std::function<void(const CheckResult&)> on_check;
};

struct AcceptanceReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  // False when the criterion has a failed check or did not run.
  bool passed(int criterion) const;
  int count(int criterion) const;
};

constexpr int kCriteria = 8;
const char* criterion_title(int criterion);

AcceptanceReport run_acceptance(const AcceptanceOptions& options);

}  // namespace foldweyl
