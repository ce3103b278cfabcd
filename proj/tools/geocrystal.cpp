// Command-line front end. Exit codes: 0 every check passed, 1 some check
// failed or was inconclusive, 2 configuration or I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "geocrystal/birational.hpp"
#include "geocrystal/crystal.hpp"
#include "geocrystal/suites.hpp"
#include "geocrystal/tropical.hpp"

namespace gc = geocrystal;

namespace {

struct Globals {
  std::uint64_t seed = gc::kDefaultSeed;
  std::size_t trials = gc::kDefaultTrials;
  std::string mode = "auto";
  std::optional<std::string> json;  // "" or "-" means stdout
  bool quiet = false;
  bool timings = false;
};

std::uint64_t seed_from_env() {
  const char* env = std::getenv("GEOCRYSTAL_SEED");
  if (!env || !*env) return gc::kDefaultSeed;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw gc::Error(gc::ErrorCode::kConfigError, std::string("GEOCRYSTAL_SEED is not an unsigned integer: ") + env);
}

gc::CheckConfig check_config(const Globals& g) {
  if (g.trials == 0) throw gc::Error(gc::ErrorCode::kConfigError, "--trials must be positive");
  return {gc::parse_mode(g.mode), g.trials, g.seed};
}

int emit(const gc::VerificationReport& report, const Globals& g) {
  const bool json_to_stdout = g.json && (g.json->empty() || *g.json == "-");
  if (g.json) {
    const std::string text = report.to_json(g.timings);
    if (json_to_stdout) {
      std::cout << text << "\n";
    } else {
      std::ofstream out(*g.json);
      if (!out || !(out << text << "\n")) throw gc::Error(gc::ErrorCode::kIoError, "cannot write " + *g.json);
    }
  }
  if (!g.quiet && !json_to_stdout) std::cout << report.to_text();
  return report.all_passed() ? 0 : 1;
}

void print_targets(const std::string& target, bool full) {
  const gc::TropicalCrystal& crystal = gc::TropicalCrystal::embedded();
  auto show = [&](const std::string& label, const gc::PLExpression& e) {
    std::cout << label << " = ";
    if (full) {
      std::cout << e.to_string() << "\n";
    } else {
      std::cout << "<" << e.node_count() << " nodes>\n";
    }
  };
  if (target == "gamma" || target == "epsilon") {
    for (int i = 0; i < 3; ++i) {
      show((target == "gamma" ? "wt" : "eps") + std::to_string(i), target == "gamma" ? crystal.wt(i) : crystal.eps(i));
    }
    return;
  }
  const int i = target == "e0" ? 0 : target == "e1" ? 1 : 2;
  const auto& comps = crystal.action(i);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    show("e" + std::to_string(i) + "[xi_" + std::to_string(k) + "]", comps[k]);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the D4(3) affine geometric crystal and its tropicalization"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  try {
    g.seed = seed_from_env();
  } catch (const gc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  app.add_option("--seed", g.seed, "RNG seed (default from GEOCRYSTAL_SEED, else 20240917)");
  app.add_option("--trials", g.trials, "Random points per randomized identity")->check(CLI::PositiveNumber);
  app.add_option("--mode", g.mode, "auto, symbolic or randomized")->check(CLI::IsMember({"auto", "symbolic", "randomized"}));
  app.add_option("--json", g.json, "Write the JSON report to PATH (stdout if PATH is omitted or -)")
      ->expected(0, 1);
  app.add_flag("--quiet", g.quiet, "Suppress the text report");
  app.add_flag("--timings", g.timings, "Include wall_time_ms in JSON output");

  std::function<int()> action;

  auto suite_command = [&](const std::string& name, const std::string& suite, const std::string& help) {
    app.add_subcommand(name, help)->callback([&, suite] {
      action = [&, suite] {
        gc::RunConfig cfg;
        cfg.check = check_config(g);
        cfg.sweep.seed = g.seed;
        return emit(gc::run_suite(suite, cfg), g);
      };
    });
  };
  suite_command("verify-module", "module", "Transcribed module coefficients and self-consistency");
  suite_command("verify-sigma", "sigma", "Defining equation, round trips and the node-1 intertwiner");
  suite_command("verify-e0", "e0", "Induced e0 against its closed form, gamma0/epsilon0 pullbacks");

  std::string chart = "all";
  auto* axioms = app.add_subcommand("verify-axioms", "Geometric-crystal axioms on a chart");
  axioms->add_option("--chart", chart, "V1, w1, w2, a control word (word0, word010, ...) or all");
  axioms->callback([&] {
    action = [&] {
      const gc::CheckConfig cfg = check_config(g);
      if (chart == "all") {
        gc::RunConfig run;
        run.check = cfg;
        return emit(gc::run_suite("axioms", run), g);
      }
      return emit(gc::run_axioms(chart, cfg), g);
    };
  });

  gc::RunConfig all_cfg;
  auto* all = app.add_subcommand("all", "Every suite");
  all->callback([&] {
    action = [&] {
      all_cfg.check = check_config(g);
      all_cfg.sweep.seed = g.seed;
      return emit(gc::run_suite("all", all_cfg), g);
    };
  });

  std::string target;
  bool print = false;
  auto* trop = app.add_subcommand("tropicalize", "Piecewise-linear crystal maps");
  trop->add_option("--target", target, "e0, e1, e2, gamma or epsilon")
      ->required()
      ->check(CLI::IsMember({"e0", "e1", "e2", "gamma", "epsilon"}));
  trop->add_flag("--print", print, "Print the full max-plus expressions");
  trop->callback([&] {
    action = [&] {
      print_targets(target, print);
      return 0;
    };
  });

  gc::CrystalSweepConfig sweep;
  auto* crystal = app.add_subcommand("check-crystal", "Tropical crystal axioms on a box and random points");
  crystal->add_option("--box", sweep.box_radius, "Box radius R: coordinates in [-R, R]")->check(CLI::NonNegativeNumber);
  crystal->add_option("--steps", sweep.step_radius, "Step radius S: steps in -S..S")->check(CLI::NonNegativeNumber);
  crystal->add_option("--samples", sweep.samples, "Additional random points");
  std::optional<std::uint64_t> crystal_seed;
  crystal->add_option("--seed", crystal_seed, "Seed for the random points");
  crystal->callback([&] {
    action = [&] {
      sweep.seed = crystal_seed.value_or(g.seed);
      return emit(gc::check_crystal_axioms(gc::TropicalCrystal::embedded(), sweep), g);
    };
  });

  auto* dump_module = app.add_subcommand("dump-module", "Weights and action tables of the module");
  dump_module->callback([&] {
    action = [] {
      std::cout << gc::dump_module();
      return 0;
    };
  });

  std::string formula;
  auto* dump_formula = app.add_subcommand("dump-formula", "Canonical text of a named formula");
  dump_formula->add_option("name", formula, "Formula name, e.g. gamma0 or a")->required();
  dump_formula->callback([&] {
    action = [&] {
      std::cout << gc::dump_formula(formula) << "\n";
      return 0;
    };
  });

  int component = 0;
  auto* derive = app.add_subcommand("derive-e0",
                                    "Compose sigma^-1 o e0 o sigma symbolically for one coordinate and reduce it by "
                                    "the known factors (component 0 takes seconds, the others far longer)");
  derive->add_option("--component", component, "Coordinate 0..5")->check(CLI::Range(0, 5));
  derive->add_flag("--print", print, "Print the reduced function");
  derive->callback([&] {
    action = [&] {
      const gc::RationalFunction f = gc::derive_e0_component(component);
      const bool agrees = gc::equal_symbolic(f, gc::ChartMaps::embedded().e0_closed.at(component));
      if (print) std::cout << f.to_string() << "\n";
      if (!g.quiet) std::cout << "e0x" << component << (agrees ? " matches" : " differs from") << " the closed form\n";
      return agrees ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
    return action ? action() : 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const gc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
