#include "geocrystal/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include <json.hpp>

#include "geocrystal/errors.hpp"

namespace geocrystal {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

std::string_view to_string(CheckMode m) {
  switch (m) {
    case CheckMode::kSymbolic: return "symbolic";
    case CheckMode::kRandomized: return "randomized";
    case CheckMode::kExhaustive: return "exhaustive";
  }
  return "?";
}

bool VerificationReport::all_passed() const noexcept { return failures() == 0; }

std::size_t VerificationReport::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::kFail;
  }));
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

void VerificationReport::sort_checks() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
}

std::string VerificationReport::to_json(bool include_timings) const {
  VerificationReport sorted = *this;
  sorted.sort_checks();
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["suite"] = suite;
  j["passed"] = all_passed();
  j["failures"] = failures();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : sorted.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    e["mode"] = to_string(c.mode);
    e["trials"] = c.trials;
    e["seed"] = c.seed ? nlohmann::ordered_json(*c.seed) : nlohmann::ordered_json(nullptr);
    e["witness"] = c.witness ? nlohmann::ordered_json(*c.witness) : nlohmann::ordered_json(nullptr);
    if (!c.detail.empty()) e["detail"] = c.detail;
    if (include_timings) e["wall_time_ms"] = c.wall_time_ms;
    arr.push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
  VerificationReport sorted = *this;
  sorted.sort_checks();
  std::string out;
  for (const auto& c : sorted.checks) {
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1f ms", c.wall_time_ms);
    out += std::string(to_string(c.status)) + "  " + c.name + "  [" + std::string(to_string(c.mode));
    if (c.trials) out += ", " + std::to_string(c.trials) + " trials";
    out += ", " + std::string(timing) + "]";
    if (!c.detail.empty()) out += "  " + c.detail;
    if (c.witness) out += "\n      witness: " + *c.witness;
    out += "\n";
  }
  out += suite + ": " + std::to_string(checks.size() - failures()) + "/" + std::to_string(checks.size()) +
         " checks without failure\n";
  return out;
}

CheckResult timed_check(std::string name, CheckMode mode, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = std::move(name);
  r.mode = mode;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const Error& e) {
    r.status = CheckStatus::kFail;
    r.detail = std::string(to_string(e.code())) + ": " + e.what();
    if (!r.witness) r.witness = "error";
  }
  r.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (r.status == CheckStatus::kFail && !r.witness) r.witness = "unspecified";
  return r;
}

}  // namespace geocrystal
