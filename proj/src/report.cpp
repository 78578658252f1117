#include "kronlab/report.hpp"

namespace kronlab {

void Report::finalize() {
  if (checks.empty()) {
    status = "skipped";
    return;
  }
  status = "pass";
  for (const auto& c : checks)
    if (!c.passed) status = "fail";
}

std::vector<std::string> Report::failing_checks() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.name);
  return out;
}

nlohmann::json to_json(const Report& r, bool with_timing) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"inputs", c.inputs}, {"expected", c.expected},
                      {"got", c.got}});
  nlohmann::json j = {{"claim", r.claim}, {"status", r.status}, {"checks", checks}, {"seed", r.seed}};
  if (with_timing) j["ms"] = r.ms;
  return j;
}

}  // namespace kronlab
