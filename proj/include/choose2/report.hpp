#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace choose2 {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.3.0";
inline constexpr int kReportSchemaVersion = 1;

// One named check: pass/fail, the worst residual where one applies, how many
// instances were examined, and a structured counterexample on failure.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::optional<double> residual;
  std::size_t instances = 0;
  json witness = nullptr;

  // Records a failing instance, keeping the first witness seen.
  void fail(json w) {
    if (pass) witness = std::move(w);
    pass = false;
  }

  void observe_residual(double r) {
    residual = residual ? std::max(*residual, r) : r;
  }

  json to_json() const {
    json j;
    j["name"] = name;
    j["status"] = pass ? "pass" : "fail";
    j["residual"] = residual ? json(*residual) : json(nullptr);
    j["instances"] = instances;
    j["witness"] = witness;
    return j;
  }
};

struct VerificationReport {
  std::string suite;
  json parameters = json::object();
  std::vector<CheckResult> checks;
  double wall_time = 0.0;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  }

  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void add(const std::vector<CheckResult>& cs) {
    checks.insert(checks.end(), cs.begin(), cs.end());
  }

  json to_json() const {
    auto sorted = checks;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.name < b.name; });
    json j;
    j["schemaVersion"] = kReportSchemaVersion;
    j["suite"] = suite;
    j["version"] = kVersion;
    j["parameters"] = parameters;
    j["status"] = passed() ? "pass" : "fail";
    j["checks"] = json::array();
    for (const auto& c : sorted) j["checks"].push_back(c.to_json());
    j["wallTime"] = wall_time;
    return j;
  }
};

}  // namespace choose2
