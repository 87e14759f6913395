#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flipiet/json_io.hpp"
#include "flipiet/numeric.hpp"

namespace flipiet {

enum class CheckStatus { pass, fail, skipped };

std::string_view to_string(CheckStatus s);

struct CheckRecord {
  std::string id;  // "c01" ... "c12"
  std::string description;
  CheckStatus status = CheckStatus::skipped;
  std::string measured;
  std::string tolerance;
  std::string detail;
  double runtime_seconds = 0;
  double runtime_limit_seconds = 0;
};

struct VerificationOptions {
  std::string suite = "all";  // all|matrices|constructions|theorem31|tree
  std::uint64_t seed = 42;
  int samples = 1000;      // (3,1)-CET samples
  int samples_2cet = 200;  // per flip count
  int n_max = 9;
  // Backend of the Rauzy-orbit checks. Certificates are always exact. The
  // constructed lengths are float data, so exact ties (alpha/beta outputs)
  // are only visible to the float backend's tolerance.
  Backend backend = Backend::floating;
  unsigned threads = 0;
  bool enforce_runtime = true;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  Backend backend = Backend::exact;
  int samples = 0;
  std::vector<CheckRecord> checks;  // sorted by id

  // Pass iff every non-skipped check passes.
  bool passed() const;
  // Deterministic for a given seed unless `timing` adds runtimes.
  Json to_json(bool timing = false) const;
};

// Throws std::invalid_argument on an unknown suite.
VerificationReport run_verification(const VerificationOptions& options);

// Suites and the criteria they contain.
std::vector<int> suite_criteria(const std::string& suite);

// A single criterion by number (1..12).
CheckRecord run_criterion(int number, const VerificationOptions& options);

}  // namespace flipiet
