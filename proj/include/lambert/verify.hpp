#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace lambert {

// Outcome of one verification sweep.
struct SuiteResult {
  std::string suite;
  bool passed = false;
  std::vector<std::string> notes;   // human-readable one-liners
  nlohmann::ordered_json details;   // machine-readable specifics
};

// The available sweeps: inverse, roundtrip, entries, recurrence, closedB,
// sigma -- in that canonical order.
const std::vector<std::string>& verify_suite_names();

// Runs one named sweep with bound n; alpha selects the power pair where one
// is used.  Unknown suite names throw std::invalid_argument.
SuiteResult run_verify_suite(const std::string& suite, std::int64_t n,
                             std::int64_t alpha = 1);

}  // namespace lambert
