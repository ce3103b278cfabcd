#include "geocrystal/suites.hpp"

#include <algorithm>
#include <sstream>

#include "geocrystal/axioms.hpp"
#include "geocrystal/birational.hpp"
#include "geocrystal/fundrep.hpp"

namespace geocrystal {

namespace {

void add(VerificationReport& r, std::vector<CheckResult> checks) {
  for (auto& c : checks) r.append(std::move(c));
}

// A control chart on a short word, with fresh coordinates z0, z1, ...
CrystalModel word_model(const std::vector<int>& letters) {
  std::string name = "word";
  std::vector<VarId> coords;
  std::vector<int> nodes;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    name += std::to_string(letters[k]);
    coords.push_back(VarRegistry::intern("z" + std::to_string(k)));
    if (std::find(nodes.begin(), nodes.end(), letters[k]) == nodes.end()) nodes.push_back(letters[k]);
  }
  std::sort(nodes.begin(), nodes.end());
  return torus_chart_model(name, make_word(letters), coords, nodes);
}

const std::vector<std::vector<int>>& control_words() {
  static const std::vector<std::vector<int>> words{{0}, {1}, {2}, {0, 2}, {0, 1, 0}, {1, 2}};
  return words;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"module", "axioms", "sigma", "e0", "tropical", "all"};
  return names;
}

VerificationReport run_axioms(std::string_view chart, const CheckConfig& cfg) {
  VerificationReport r{"axioms." + std::string(chart), {}};
  if (chart == "V1") {
    add(r, check_all_axioms(v1_model(), cfg));
  } else if (chart == "w1") {
    add(r, check_all_axioms(chart_w1_model(), cfg));
  } else if (chart == "w2") {
    add(r, check_all_axioms(chart_w2_model(), cfg));
  } else {
    bool found = false;
    for (const auto& w : control_words()) {
      CrystalModel m = word_model(w);
      if (m.name != chart) continue;
      add(r, check_all_axioms(m, cfg));
      found = true;
    }
    if (!found) throw Error(ErrorCode::kConfigError, "unknown chart '" + std::string(chart) + "'");
  }
  r.sort_checks();
  return r;
}

std::vector<CheckResult> verify_chart_closed_forms() {
  std::vector<CheckResult> out;
  const FormulaTable& table = FormulaTable::embedded();
  const auto x = symbolic_x();
  const TorusWordT<RationalFunction> point{word_w1(), x};
  const RationalFunction c = RationalFunction::variable(vars::c());

  const std::vector<std::pair<int, std::vector<std::pair<int, std::string>>>> actions{
      {1, {{1, "C1"}, {3, "C3"}, {5, "C5"}}}, {2, {{2, "C2"}, {4, "C4"}}}};
  for (const auto& [i, factors] : actions) {
    out.push_back(timed_check("chart.w1.closed_form.e" + std::to_string(i), CheckMode::kSymbolic, [&](CheckResult& r) {
      const auto moved = e_action(point, i, c).coords;
      std::vector<RationalFunction> expected = x;
      for (const auto& [k, name] : factors) {
        const auto slot = static_cast<std::size_t>(k);
        expected[slot] = table.get(name) * x[slot];
      }
      r.trials = 6;
      r.detail = "six coordinates, exact equality";
      for (std::size_t k = 0; k < 6; ++k) {
        if (!equal_symbolic(moved[k], expected[k])) {
          r.status = CheckStatus::kFail;
          r.witness = "coordinate x" + std::to_string(k);
          return;
        }
      }
    }));
    for (const char* which : {"gamma", "epsilon"}) {
      const std::string name = which + std::to_string(i);
      out.push_back(timed_check("chart.w1.closed_form." + name, CheckMode::kSymbolic, [&](CheckResult& r) {
        const RationalFunction torus =
            std::string_view(which) == "gamma" ? gamma(point, i) : epsilon(point, i);
        r.trials = 1;
        r.detail = "exact equality with the torus formula";
        if (!equal_symbolic(torus, table.get(name))) {
          r.status = CheckStatus::kFail;
          r.witness = "torus value " + torus.to_string();
        }
      }));
    }
  }
  return out;
}

VerificationReport run_suite(std::string_view name, const RunConfig& cfg) {
  VerificationReport r{std::string(name), {}};
  const bool all = name == "all";
  bool known = all;
  if (all || name == "module") {
    known = true;
    add(r, verify_transcribed_coefficients());
    add(r, module_self_consistency());
  }
  if (all || name == "sigma") {
    known = true;
    add(r, verify_defining_equation(cfg.check));
    add(r, verify_round_trips(cfg.check));
    add(r, verify_intertwiner(cfg.check));
  }
  if (all || name == "e0") {
    known = true;
    add(r, verify_e0(cfg.check));
  }
  if (all || name == "axioms") {
    known = true;
    add(r, verify_chart_closed_forms());
    for (const char* chart : {"V1", "w1", "w2"}) r.append(run_axioms(chart, cfg.check));
    for (const auto& w : control_words()) r.append(run_axioms(word_model(w).name, cfg.check));
  }
  if (all || name == "tropical") {
    known = true;
    const TropicalCrystal& crystal = TropicalCrystal::embedded();
    r.append(check_positivity(FormulaTable::embedded()));
    r.append(check_oracle_agreement(crystal, cfg.oracle_samples, cfg.check.seed));
    r.append(check_crystal_axioms(crystal, cfg.sweep));
  }
  if (!known) {
    throw Error(ErrorCode::kConfigError, "unknown suite '" + std::string(name) +
                                             "' (expected module, axioms, sigma, e0, tropical or all)");
  }
  r.sort_checks();
  return r;
}

std::string dump_formula(std::string_view name) { return FormulaTable::embedded().get(name).to_string(); }

std::string dump_module() {
  std::ostringstream out;
  for (BasisLabel b : kBasis) out << "wt(" << label_name(b) << ") = " << weight_of(b).to_string() << "\n";
  for (Chevalley which : {Chevalley::kE, Chevalley::kF}) {
    for (int i = 0; i < 3; ++i) {
      const char* op = which == Chevalley::kE ? "e" : "f";
      for (const Transition& t : action_table(which, i)) {
        out << op << i << "(" << label_name(t.from) << ") = ";
        if (t.coefficient != Rational(1)) out << t.coefficient.to_string() << "*";
        out << label_name(t.to) << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace geocrystal
