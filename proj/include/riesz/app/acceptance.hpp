#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace riesz::app {

struct VerifyHooks {
  /// Antiderivative of log^2 under test; the library's by default.
  std::function<double(double)> antiderivative;
  /// Restrict the run to these check names (empty: all).
  std::vector<std::string> only;
};

struct CheckResult {
  std::string name;
  bool gating = true;
  bool passed = false;
  std::string detail;
  nlohmann::json data;
};

struct AcceptanceReport {
  std::vector<CheckResult> checks;
  nlohmann::json theorem1_probe;

  bool all_gating_passed() const;
  /// Name of the first failed gating check, or "".
  std::string first_failure() const;
  nlohmann::json to_json() const;
};

AcceptanceReport run_acceptance(std::uint64_t seed, const VerifyHooks& hooks = {});

}  // namespace riesz::app
