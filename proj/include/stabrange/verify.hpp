#pragma once

#include <string>
#include <vector>

namespace stabrange {

struct SuiteResult {
  std::string name;
  long passed = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// The full oracle suite, one result per module. max_n bounds the symmetric
// group degrees the suites sweep (the spec default is 6). Suites may run in
// parallel; results come back sorted by suite name either way.
std::vector<SuiteResult> run_all_suites(int max_n, bool parallel = true);

SuiteResult suite_partition(int max_n);
SuiteResult suite_symchar(int max_n);
SuiteResult suite_charpoly(int max_n);
SuiteResult suite_ranges(int max_n);
SuiteResult suite_witness(int max_n);
SuiteResult suite_coinv(int max_n);
SuiteResult suite_config(int max_n);

}  // namespace stabrange
