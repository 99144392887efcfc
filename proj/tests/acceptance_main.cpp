// Acceptance runner: one PASS/FAIL line per criterion, failing checks listed
// underneath.  Exit status 0 only when every criterion passed.
//
//   acceptance [--level quick|full] [--inject-fault] [--budget SECONDS] [--verbose]

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#include "foldweyl/acceptance.hpp"

using namespace foldweyl;

namespace {

int usage() {
  std::cerr << "usage: acceptance [--level quick|full] [--inject-fault] [--budget SECONDS] [--verbose]\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  AcceptanceOptions opt;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--level" && i + 1 < argc) {
      const std::string v = argv[++i];
      if (v == "quick")
        opt.level = Level::Quick;
      else if (v == "full")
        opt.level = Level::Full;
      else
        return usage();
    } else if (arg == "--inject-fault") {
      opt.inject_jacobi_fault = true;
    } else if (arg == "--budget" && i + 1 < argc) {
      opt.check_budget = std::atof(argv[++i]);
    } else if (arg == "--verbose") {
      verbose = true;
    } else {
      return usage();
    }
  }
  if (verbose)
    opt.on_check = [](const CheckResult& c) {
      std::cerr << "  [" << c.criterion << "] " << (c.passed ? "ok  " : "FAIL") << ' ' << c.name << " ("
                << std::fixed << std::setprecision(2) << c.seconds << "s)\n";
    };

  const AcceptanceReport report = run_acceptance(opt);
  for (int k = 1; k <= kCriteria; ++k) {
    std::cout << (report.passed(k) ? "PASS" : "FAIL") << "  criterion " << k << ": " << criterion_title(k) << " ("
              << report.count(k) << " checks)\n";
    for (const auto& c : report.checks)
      if (c.criterion == k && !c.passed) std::cout << "      failed: " << c.name << ": " << c.detail << '\n';
  }
  return report.passed() ? 0 : 1;
}
