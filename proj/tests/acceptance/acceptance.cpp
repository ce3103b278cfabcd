// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "geocrystal/axioms.hpp"
#include "geocrystal/birational.hpp"
#include "geocrystal/crystal.hpp"
#include "geocrystal/fundrep.hpp"
#include "geocrystal/parser.hpp"

using namespace geocrystal;

namespace {

struct Outcome {
  bool ok = true;
  std::string summary;
};

// Every check passes; randomized ones ran at least `min_trials` trials.
Outcome all_pass(const std::vector<CheckResult>& checks, std::size_t min_trials = 0) {
  Outcome o;
  std::size_t passed = 0;
  for (const auto& c : checks) {
    const bool enough = c.mode != CheckMode::kRandomized || c.trials >= min_trials;
    if (c.passed() && enough) {
      ++passed;
    } else if (o.ok) {
      o.ok = false;
      o.summary = "first failure " + c.name + (c.witness ? " at " + *c.witness : "") +
                  (enough ? "" : " (too few trials)") + "; ";
    }
  }
  o.summary += std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks";
  return o;
}

std::size_t count_with(const std::vector<CheckResult>& checks, const std::string& part) {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.name.find(part) != std::string::npos;
  return n;
}

bool all_symbolic(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (c.mode != CheckMode::kSymbolic) return false;
  return true;
}

void require(Outcome& o, bool cond, const std::string& why) {
  if (!cond) {
    o.ok = false;
    o.summary += "; " + why;
  }
}

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("error: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > budget_s) {
    o.ok = false;
    o.summary += "; over time budget";
  }
  failures += !o.ok;
  std::printf("[%s] %d %s: %s (%.1f s, budget %.0f s)\n", o.ok ? "PASS" : "FAIL", id, title, o.summary.c_str(), s,
              budget_s);
  std::fflush(stdout);
}

}  // namespace

int main() {
  const CheckConfig cfg{ModePreference::kAuto, 200, kDefaultSeed};

  criterion(1, "module coefficients match the transcribed X and Y formulas", 5, [] {
    const auto checks = verify_transcribed_coefficients();
    Outcome o = all_pass(checks);
    require(o, checks.size() == 16 && all_symbolic(checks), "expected 16 exact checks");
    return o;
  });

  criterion(2, "defining equation Y(sigma(x)) = a(x) X(x)", 60, [&] {
    const auto checks = verify_defining_equation(cfg);
    Outcome o = all_pass(checks);
    require(o, checks.size() == 8 && all_symbolic(checks), "expected 8 exact checks");
    return o;
  });

  criterion(3, "sigma is birational", 60, [&] {
    const auto checks = verify_round_trips(cfg);
    Outcome o = all_pass(checks, 200);
    require(o, count_with(checks, "symbolic") == 2, "missing symbolic x0/y0 identities");
    return o;
  });

  criterion(4, "induced e0 equals the closed form", 300, [&] {
    const auto checks = verify_e0(cfg);
    Outcome o = all_pass(checks, 200);
    require(o, count_with(checks, "e0.closed_form.x") == 6, "expected 6 coordinates");
    for (const auto& c : checks)
      if (c.name.find("pullback") != std::string::npos && c.mode != CheckMode::kSymbolic)
        require(o, false, c.name + " not symbolic");
    const auto& m = ChartMaps::embedded();
    const auto& t = FormulaTable::embedded();
    require(o, equal_symbolic(m.gamma0, parse_rf("x0^2/(x1*x3*x5)")), "gamma0 form");
    require(o, equal_symbolic(m.epsilon0, t.get("E") / parse_rf("x0^3*x2*x3")), "epsilon0 form");
    return o;
  });

  criterion(5, "geometric crystal axioms on the first chart, nodes 0,1,2", 600, [&] {
    const auto checks = check_all_axioms(v1_model(), cfg);
    Outcome o = all_pass(checks, 200);
    require(o, count_with(checks, ".ii.") == 9, "expected 9 weight-law pairs");
    require(o, count_with(checks, ".iv.") == 3, "expected 3 epsilon laws");
    require(o, count_with(checks, ".verma.") == 3, "expected 3 Verma relations");
    return o;
  });

  criterion(6, "positivity certificates", 10, [] {
    const auto report = check_positivity(FormulaTable::embedded());
    Outcome o = all_pass(report.checks);
    require(o, report.checks.size() == 9, "expected 9 certificate groups");
    return o;
  });

  criterion(7, "tropical oracle agreement and crystal sweep", 300, [] {
    const TropicalCrystal& tc = TropicalCrystal::embedded();
    auto checks = check_oracle_agreement(tc, 200, kDefaultSeed).checks;
    const std::size_t oracle = checks.size();
    const auto sweep = check_crystal_axioms(tc, CrystalSweepConfig{});
    checks.insert(checks.end(), sweep.checks.begin(), sweep.checks.end());
    Outcome o = all_pass(checks);
    o.summary += " (" + std::to_string(oracle) + " oracle, " + std::to_string(sweep.checks.size()) +
                 " sweep over [-5,5]^6 x steps -2..2 + 10000 random)";
    return o;
  });

  criterion(8, "module self-consistency", 1, [] {
    const auto checks = module_self_consistency();
    Outcome o = all_pass(checks);
    require(o, count_with(checks, "nilpotency") > 0, "nilpotency not checked");
    return o;
  });

  return failures == 0 ? 0 : 1;
}
