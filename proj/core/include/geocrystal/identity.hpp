#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "geocrystal/rational_function.hpp"
#include "geocrystal/report.hpp"

namespace geocrystal {

inline constexpr std::size_t kDefaultTrials = 200;
inline constexpr std::uint64_t kDefaultSeed = 20240917;
inline constexpr std::int64_t kCoordinateMax = 1'000'000;
inline constexpr std::int64_t kParameterMax = 1'000;

/// Deterministic integer sampler. Uses unbiased rejection on mt19937_64 so the
/// stream depends only on the seed, not on the standard library's
/// distribution implementations.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Which variables a random point assigns and from which ranges: coordinates
/// from 1..coordinate_max, parameters (c, d) from 1..parameter_max.
struct SampleSpace {
  std::vector<VarId> coordinates;
  std::vector<VarId> parameters;
  std::int64_t coordinate_max = kCoordinateMax;
  std::int64_t parameter_max = kParameterMax;

  /// Variables x*, y* and any others are coordinates; c and d are parameters.
  static SampleSpace for_variables(const std::vector<VarId>& vars);
  EvalPoint sample(SampleRng& rng) const;
};

struct RandomizedOutcome {
  bool equal = true;
  std::size_t trials = 0;    // accepted points
  std::size_t rejected = 0;  // points outside the domain
  std::uint64_t seed = 0;
  std::optional<EvalPoint> witness;
  /// log10 of the Schwartz-Zippel failure bound (D/S)^trials when the degree
  /// D is known.
  std::optional<double> log10_failure_bound;
};

/// Calls `holds` at `trials` random points of the space. Points at which
/// `holds` raises a domain failure are rejected and resampled; more than 90%
/// rejections raises DegenerateDomain. Stops at the first point where
/// `holds` returns false.
RandomizedOutcome check_at_random_points(const std::function<bool(const EvalPoint&)>& holds,
                                         const SampleSpace& space, std::size_t trials,
                                         std::uint64_t seed);

RandomizedOutcome rf_equal_randomized(const RationalFunction& f, const RationalFunction& g,
                                      std::size_t trials, std::uint64_t seed);

enum class ModePreference { kAuto, kSymbolic, kRandomized };

std::string_view to_string(ModePreference m);
/// "auto", "symbolic", "randomized"; ConfigError otherwise.
ModePreference parse_mode(std::string_view text);

struct CheckConfig {
  ModePreference mode = ModePreference::kAuto;
  std::size_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
};

/// Copies a randomized outcome into a report entry.
void record(CheckResult& r, const RandomizedOutcome& o);

}  // namespace geocrystal
