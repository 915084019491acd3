#pragma once

#include <string>
#include <vector>

namespace qks {

struct VerifyOptions {
  int jobs = 1;       // worker count for table and enumeration sweeps
  unsigned seed = 1;  // seed for the sampled spot checks
  int max_n = -1;     // override the suite's default cell-count bound
  int max_r = -1;     // override the suite's default node-count bound
};

struct SuiteReport {
  std::string name;
  std::string summary;  // bounds, counts, and the first few failure notes
  long long cases = 0;
  long long failures = 0;
  bool passed() const { return failures == 0; }
};

// Suite names in criterion order: theorem-main, shoji, plethysm,
// running-example, morris, rotation-charge, appendix, catabolism, wreath,
// guards.
const std::vector<std::string>& suite_names();

// Runs one named suite; throws std::invalid_argument for unknown names.
// integrity_error escapes if a structural guarantee breaks mid-suite.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt = {});

std::vector<SuiteReport> run_all_suites(const VerifyOptions& opt = {});

}  // namespace qks
