#include "hkmod/report.hpp"

namespace hkmod {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "unknown";
}

const Check* TheoremReport::find(const std::string& name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool TheoremReport::failed() const {
  for (const auto& c : checks_) {
    if (c.status == CheckStatus::Fail) return true;
  }
  return false;
}

void TheoremReport::add(std::string name, bool pass, Json witness, std::string hypothesis) {
  if (stop_after_failure && failed()) {
    skip(std::move(name), "an earlier check failed");
    return;
  }
  checks_.push_back({std::move(name), pass ? CheckStatus::Pass : CheckStatus::Fail, std::move(witness),
                     std::move(hypothesis)});
}

void TheoremReport::skip(std::string name, std::string reason) {
  checks_.push_back({std::move(name), CheckStatus::Skipped, Json{{"reason", std::move(reason)}}, {}});
}

bool TheoremReport::overall() const {
  if (checks_.empty()) return false;
  for (const auto& c : checks_) {
    if (c.status != CheckStatus::Pass) return false;
  }
  return true;
}

Json TheoremReport::to_json() const {
  Json out;
  out["theorem"] = theorem_;
  Json checks = Json::array();
  for (const auto& c : checks_) {
    Json item;
    item["name"] = c.name;
    item["status"] = to_string(c.status);
    item["witness"] = c.witness;
    if (!c.hypothesis.empty()) item["hypothesis"] = c.hypothesis;
    checks.push_back(std::move(item));
  }
  out["checks"] = std::move(checks);
  out["info"] = info_;
  out["overall"] = overall() ? "pass" : "fail";
  return out;
}

}  // namespace hkmod
