#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace geocrystal {

enum class CheckStatus { kPass, kFail, kInconclusive };
enum class CheckMode { kSymbolic, kRandomized, kExhaustive };

std::string_view to_string(CheckStatus s);
std::string_view to_string(CheckMode m);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  CheckMode mode = CheckMode::kSymbolic;
  std::size_t trials = 0;
  std::optional<std::uint64_t> seed;
  /// Point (or lattice vector) at which a failing identity was observed.
  std::optional<std::string> witness;
  std::string detail;
  double wall_time_ms = 0;

  bool passed() const noexcept { return status == CheckStatus::kPass; }
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_passed() const noexcept;
  std::size_t failures() const noexcept;
  void append(const VerificationReport& other);
  void append(CheckResult check) { checks.push_back(std::move(check)); }
  void sort_checks();

  /// Deterministic JSON: checks sorted by name; wall times only on request.
  std::string to_json(bool include_timings = false) const;
  /// One line per check.
  std::string to_text() const;
};

/// Runs `body`, fills in name and wall time. Library errors thrown by the body
/// become a failing check carrying the error text.
CheckResult timed_check(std::string name, CheckMode mode,
                        const std::function<void(CheckResult&)>& body);

}  // namespace geocrystal
