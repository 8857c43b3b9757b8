#pragma once

// Seeded randomized law suites, shared by the CLI and the acceptance runner.

#include <cstdint>
#include <string>
#include <vector>

namespace gsa {

struct LawResult {
  std::string law;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool informational = false;  // reported but not counted by SuiteReport::ok
  bool ok() const { return failures == 0 && cases > 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<LawResult> laws;
  double seconds = 0;
  bool ok() const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t n_max = 3;  // largest number of vector slots or tangent order
  std::size_t count = 0;  // random instances; 0 picks the suite default
};

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace gsa
