#pragma once

#include <string>
#include <vector>

namespace level1 {

struct SuiteResult {
  std::string id;
  std::size_t instances = 0;
  /// Serialized counterexamples (eNewick plus the violated relation).
  std::vector<std::string> failures;
  /// Data the suite reports without asserting (counts, witnesses).
  std::vector<std::string> notes;
  double elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

struct VerificationReport {
  std::size_t max_n = 0;
  std::vector<SuiteResult> suites;

  bool pass() const;
};

struct VerifyParams {
  /// Largest enumerated n. Suites whose statement concerns n <= 5 cap there.
  std::size_t max_n = 5;
};

const std::vector<std::string>& suite_ids();

/// Throws UnknownSuite.
SuiteResult run_suite(const std::string& id, const VerifyParams& params);
VerificationReport run_suites(const std::vector<std::string>& ids, const VerifyParams& params);

std::string to_json(const VerificationReport& report);

}  // namespace level1
