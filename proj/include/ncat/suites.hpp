#ifndef NCAT_SUITES_HPP
#define NCAT_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ncat/core.hpp"

namespace ncat {

/// Randomized property suites shared by the CLI `check` command and the
/// acceptance tests.  Each trial derives its own seed from (seed, index)
/// so any line of the report replays in isolation.

struct TrialReport {
  int index = 0;
  std::uint64_t seed = 0;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<TrialReport> trials;
  bool ok() const;
  int failures() const;
};

std::uint64_t trial_seed(std::uint64_t base, int index);

// suite names: axioms | stable-units | orthogonality | crosscheck
SuiteReport run_suite(const std::string& suite, int n, int size, std::uint64_t seed, int trials);

// As run_suite("orthogonality", ...) but also counts the diagonal squares
// actually searched (squares over homs too large to enumerate are skipped).
SuiteReport run_orthogonality(int n, int size, std::uint64_t seed, int trials,
                              int* squares_checked);

}  // namespace ncat

#endif
