#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kshadow/serialize.hpp"

namespace kshadow {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;         // checks passed within the time limit
  bool checks_passed = false;  // checks alone, ignoring time
  std::string detail;   // deterministic summary of what was checked
  double seconds = 0;   // wall time; kept out of the JSON document
  double limit_seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240611;
  bool include_a3 = true;
};

/// Runs every acceptance criterion. Criterion 8 re-runs 1-7 and compares the
/// serialized documents byte for byte.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

/// The deterministic verify-all document (no timings).
Json acceptance_json(const std::vector<CriterionResult>& results, std::uint64_t seed);

std::string format_line(const CriterionResult& r);

}  // namespace kshadow
