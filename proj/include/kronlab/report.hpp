#pragma once

// Machine-readable verification reports.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace kronlab {

struct CheckRecord {
  std::string name;
  bool passed = true;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json expected;
  nlohmann::json got;
};

struct Report {
  std::string claim;
  std::string status = "skipped";  // pass | fail | skipped
  std::vector<CheckRecord> checks;
  std::uint64_t seed = 0;
  std::int64_t ms = 0;

  void add(CheckRecord r) { checks.push_back(std::move(r)); }
  /// pass iff every check passed; skipped when there are none.
  void finalize();
  bool passed() const { return status == "pass"; }
  std::vector<std::string> failing_checks() const;
};

/// {"claim","checks","ms","seed","status"}; each check is
/// {"expected","got","inputs","name","passed"}. Timing is left out on request.
nlohmann::json to_json(const Report& r, bool with_timing = true);

}  // namespace kronlab
