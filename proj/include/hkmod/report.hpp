#pragma once

// Structured pass/fail records for hypothesis pipelines.

#include <json.hpp>

#include <string>
#include <vector>

namespace hkmod {

using Json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus status);

struct Check {
  std::string name;
  CheckStatus status;
  Json witness;  // the exact values the check compared
  std::string hypothesis;  // which assumption the check relies on, if any
};

class TheoremReport {
 public:
  explicit TheoremReport(std::string theorem) : theorem_(std::move(theorem)) {}

  const std::string& theorem() const { return theorem_; }
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& name) const;

  /// Records a check. Once any check has failed, later checks are recorded
  /// as skipped when `stop_after_failure` is set.
  void add(std::string name, bool pass, Json witness = Json::object(), std::string hypothesis = {});
  void skip(std::string name, std::string reason);

  /// Non-gating data reported alongside the checks.
  Json& info() { return info_; }
  const Json& info() const { return info_; }

  bool stop_after_failure = false;

  /// Conjunction of every non-skipped check; false if any check was skipped.
  bool overall() const;
  bool failed() const;

  Json to_json() const;

 private:
  std::string theorem_;
  std::vector<Check> checks_;
  Json info_ = Json::object();
};

}  // namespace hkmod
