#include "geocrystal/identity.hpp"

#include <algorithm>
#include <cmath>

#include "geocrystal/errors.hpp"

namespace geocrystal {

std::int64_t SampleRng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

SampleSpace SampleSpace::for_variables(const std::vector<VarId>& vars) {
  SampleSpace s;
  for (VarId v : vars) {
    if (v == vars::c() || v == vars::d()) {
      s.parameters.push_back(v);
    } else {
      s.coordinates.push_back(v);
    }
  }
  return s;
}

EvalPoint SampleSpace::sample(SampleRng& rng) const {
  EvalPoint p;
  for (VarId v : coordinates) p.set(v, Rational(rng.uniform(1, coordinate_max)));
  for (VarId v : parameters) p.set(v, Rational(rng.uniform(1, parameter_max)));
  return p;
}

RandomizedOutcome check_at_random_points(const std::function<bool(const EvalPoint&)>& holds,
                                         const SampleSpace& space, std::size_t trials,
                                         std::uint64_t seed) {
  if (trials == 0) throw Error(ErrorCode::kConfigError, "trials must be positive");
  RandomizedOutcome out;
  out.seed = seed;
  SampleRng rng(seed);
  while (out.trials < trials) {
    EvalPoint p = space.sample(rng);
    bool ok;
    try {
      ok = holds(p);
    } catch (const Error& e) {
      if (!is_domain_failure(e)) throw;
      ++out.rejected;
      const std::size_t attempts = out.trials + out.rejected;
      if (attempts >= 20 && out.rejected * 10 > attempts * 9) {
        throw Error(ErrorCode::kDegenerateDomain,
                    std::to_string(out.rejected) + " of " + std::to_string(attempts) +
                        " sampled points left the domain");
      }
      continue;
    }
    ++out.trials;
    if (!ok) {
      out.equal = false;
      out.witness = std::move(p);
      return out;
    }
  }
  return out;
}

RandomizedOutcome rf_equal_randomized(const RationalFunction& f, const RationalFunction& g,
                                      std::size_t trials, std::uint64_t seed) {
  std::vector<VarId> vars = f.variables();
  for (VarId v : g.variables()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  const SampleSpace space = SampleSpace::for_variables(vars);
  RandomizedOutcome out = check_at_random_points(
      [&](const EvalPoint& p) { return f.evaluate(p) == g.evaluate(p); }, space, trials, seed);
  if (out.equal) {
    // f - g vanishes iff f.num*g.den - g.num*f.den does; bound by its degree.
    const double degree = static_cast<double>(
        std::max(f.num().total_degree() + g.den().total_degree(),
                 g.num().total_degree() + f.den().total_degree()));
    const double size = static_cast<double>(
        space.parameters.empty() ? space.coordinate_max
                                 : std::min(space.coordinate_max, space.parameter_max));
    if (degree == 0) {
      out.log10_failure_bound = -INFINITY;
    } else {
      out.log10_failure_bound = static_cast<double>(out.trials) * std::log10(degree / size);
    }
  }
  return out;
}

void record(CheckResult& r, const RandomizedOutcome& o) {
  r.mode = CheckMode::kRandomized;
  r.trials = o.trials;
  r.seed = o.seed;
  if (o.equal) {
    r.status = CheckStatus::kPass;
  } else {
    r.status = CheckStatus::kFail;
    r.witness = o.witness ? o.witness->to_string() : "unknown";
  }
  if (o.rejected) r.detail = std::to_string(o.rejected) + " points rejected";
}

}  // namespace geocrystal

namespace geocrystal {

std::string_view to_string(ModePreference m) {
  switch (m) {
    case ModePreference::kAuto: return "auto";
    case ModePreference::kSymbolic: return "symbolic";
    case ModePreference::kRandomized: return "randomized";
  }
  return "?";
}

ModePreference parse_mode(std::string_view text) {
  if (text == "auto") return ModePreference::kAuto;
  if (text == "symbolic") return ModePreference::kSymbolic;
  if (text == "randomized") return ModePreference::kRandomized;
  throw Error(ErrorCode::kConfigError, "unknown mode '" + std::string(text) + "'");
}

}  // namespace geocrystal
