#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "geocrystal/crystal.hpp"
#include "geocrystal/identity.hpp"
#include "geocrystal/report.hpp"

namespace geocrystal {

struct RunConfig {
  CheckConfig check;
  CrystalSweepConfig sweep;
  std::size_t oracle_samples = 200;
};

/// "module", "axioms", "sigma", "e0", "tropical" or "all".
const std::vector<std::string>& suite_names();

/// Runs one suite; ConfigError for an unknown name. Checks are sorted by name.
VerificationReport run_suite(std::string_view name, const RunConfig& cfg);

/// Axiom checks on one model: "V1", "w1", "w2", or the small words used as
/// controls ("word0", "word1", "word2", "word02", "word010", "word12").
VerificationReport run_axioms(std::string_view chart, const CheckConfig& cfg);

/// Closed forms of e1, e2, gamma1,2 and epsilon1,2 on the first chart against
/// the torus formulas, symbolically.
std::vector<CheckResult> verify_chart_closed_forms();

/// Canonical text of a named formula from the embedded table; UnknownFormula.
std::string dump_formula(std::string_view name);
/// Weights and Chevalley action tables of the module, one fact per line.
std::string dump_module();

}  // namespace geocrystal
