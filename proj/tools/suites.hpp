#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gpcx::suites {

inline constexpr const char* kVersion = "0.1.0";

// One suite run, rendered to the exact bytes the CLI writes out.  Keeping
// the bytes here lets tests and the acceptance gate compare against the
// committed golden copies without touching the filesystem.
struct SuiteOutcome {
  std::string name;
  bool all_passed = false;
  std::string results_csv;
  std::string summary_json;
};

const std::vector<std::string>& suite_names();

// Throws gpcx::ParseError for an unknown name.
SuiteOutcome run_suite(const std::string& name, uint64_t seed);

}  // namespace gpcx::suites
