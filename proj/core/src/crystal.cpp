#include "geocrystal/crystal.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "geocrystal/axioms.hpp"
#include "geocrystal/birational.hpp"
#include "geocrystal/cartan.hpp"

namespace geocrystal {

namespace {

// Closed forms on V1: which formula multiplies which coordinate.
struct ActionSpec {
  int node;
  std::vector<std::pair<int, std::string>> factors;  // (coordinate, multiplier formula)
};

const std::array<ActionSpec, 3>& action_specs() {
  static const std::array<ActionSpec, 3> specs{{
      {0, {}},  // e0x0..e0x5 are full components, handled separately
      {1, {{1, "C1"}, {3, "C3"}, {5, "C5"}}},
      {2, {{2, "C2"}, {4, "C4"}}},
  }};
  return specs;
}

std::string point_string(const LatticePoint& xi) {
  std::ostringstream s;
  s << "(";
  for (std::size_t k = 0; k < xi.size(); ++k) s << (k ? "," : "") << xi[k];
  s << ")";
  return s.str();
}

}  // namespace

std::vector<VarId> crystal_inputs() {
  std::vector<VarId> in{vars::c()};
  for (int k = 0; k < 6; ++k) in.push_back(vars::x(k));
  return in;
}

Cocharacter to_cocharacter(const LatticePoint& xi, std::int64_t step) {
  Cocharacter out{{vars::c(), step}};
  for (int k = 0; k < 6; ++k) out[vars::x(k)] = xi[static_cast<std::size_t>(k)];
  return out;
}

TropicalCrystal::TropicalCrystal(const FormulaTable& table) {
  TropicalFormulas trop(table);
  for (int k = 0; k < 6; ++k) {
    const std::string name = "e0x" + std::to_string(k);
    actions_[0].push_back(trop.get(name));
    action_sources_[0].push_back(table.get(name));
  }
  for (std::size_t i = 1; i < 3; ++i) {
    for (int k = 0; k < 6; ++k) {
      actions_[i].push_back(PLExpression::variable(vars::x(k)));
      action_sources_[i].push_back(RationalFunction::variable(vars::x(k)));
    }
    for (const auto& [k, formula] : action_specs()[i].factors) {
      const auto slot = static_cast<std::size_t>(k);
      actions_[i][slot] = trop.get(formula) + actions_[i][slot];
      action_sources_[i][slot] = table.get(formula) * action_sources_[i][slot];
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    wt_[i] = trop.get("gamma" + std::to_string(i));
    eps_[i] = trop.get("epsilon" + std::to_string(i));
    wt_sources_[i] = table.get("gamma" + std::to_string(i));
    eps_sources_[i] = table.get("epsilon" + std::to_string(i));
  }

  const std::vector<VarId> in = crystal_inputs();
  for (std::size_t i = 0; i < 3; ++i) action_programs_.emplace_back(actions_[i], in);
  std::vector<PLExpression> structure{wt_[0], wt_[1], wt_[2], eps_[0], eps_[1], eps_[2]};
  structure_program_.emplace_back(structure, in);
}

const TropicalCrystal& TropicalCrystal::embedded() {
  static const TropicalCrystal crystal(FormulaTable::embedded());
  return crystal;
}

std::size_t TropicalCrystal::node(int i) {
  if (i < 0 || i > 2) throw Error(ErrorCode::kUnknownIndex, "node " + std::to_string(i) + " is not in {0,1,2}");
  return static_cast<std::size_t>(i);
}

const std::vector<PLExpression>& TropicalCrystal::action(int i) const { return actions_[node(i)]; }
const PLExpression& TropicalCrystal::wt(int i) const { return wt_[node(i)]; }
const PLExpression& TropicalCrystal::eps(int i) const { return eps_[node(i)]; }
const std::vector<RationalFunction>& TropicalCrystal::action_source(int i) const { return action_sources_[node(i)]; }
const RationalFunction& TropicalCrystal::wt_source(int i) const { return wt_sources_[node(i)]; }
const RationalFunction& TropicalCrystal::eps_source(int i) const { return eps_sources_[node(i)]; }

LatticePoint TropicalCrystal::e(int i, std::int64_t step, const LatticePoint& xi, Workspace& ws) const {
  std::array<std::int64_t, 7> in{step, xi[0], xi[1], xi[2], xi[3], xi[4], xi[5]};
  LatticePoint out;
  action_programs_[node(i)].run(in, out, ws);
  return out;
}

LatticePoint TropicalCrystal::e(int i, std::int64_t step, const LatticePoint& xi) const {
  Workspace ws;
  return e(i, step, xi, ws);
}

std::array<std::int64_t, 6> TropicalCrystal::structure(const LatticePoint& xi, Workspace& ws) const {
  std::array<std::int64_t, 7> in{0, xi[0], xi[1], xi[2], xi[3], xi[4], xi[5]};
  std::array<std::int64_t, 6> out;
  structure_program_[0].run(in, out, ws);
  return out;
}

std::array<std::int64_t, 6> TropicalCrystal::structure(const LatticePoint& xi) const {
  Workspace ws;
  return structure(xi, ws);
}

namespace {

/// Failure tally for one named law.
struct Tally {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string witness;

  void record(bool ok, const std::function<std::string()>& describe) {
    ++trials;
    if (ok) return;
    if (failures++ == 0) witness = describe();
  }

  void merge(const Tally& other) {
    if (failures == 0 && other.failures != 0) witness = other.witness;
    trials += other.trials;
    failures += other.failures;
  }
};

class Sweeper {
 public:
  explicit Sweeper(const TropicalCrystal& crystal) : crystal_(crystal), a_(d43_cartan()) {
    for (int i = 0; i < 3; ++i) {
      eps_law_[i].name = "tropical.axioms.eps_law." + std::to_string(i);
      wt_law_[i].name = "tropical.axioms.wt_law." + std::to_string(i);
      additivity_[i].name = "tropical.axioms.additivity." + std::to_string(i);
    }
    const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    for (std::size_t k = 0; k < 3; ++k) {
      verma_pairs_[k] = pairs[k];
      relations_[k] = verma_relation(pairs[k].first, pairs[k].second);
      verma_[k].name = "tropical.axioms.verma." + std::to_string(pairs[k].first) + std::to_string(pairs[k].second);
    }
  }

  /// Laws at xi for the steps in [lo, hi]; additivity and Verma over all
  /// pairs of such steps.
  void at_point(const LatticePoint& xi, std::int64_t lo, std::int64_t hi) {
    const auto base = crystal_.structure(xi, ws_);
    for (int i = 0; i < 3; ++i) {
      // e_i^k xi for k in [2lo, 2hi], so m + n is always covered.
      auto& moved = moved_[static_cast<std::size_t>(i)];
      moved.clear();
      for (std::int64_t k = 2 * lo; k <= 2 * hi; ++k) moved.push_back(crystal_.e(i, k, xi, ws_));
      auto at = [&](std::int64_t k) -> const LatticePoint& { return moved[static_cast<std::size_t>(k - 2 * lo)]; };
      for (std::int64_t n = lo; n <= hi; ++n) {
        const LatticePoint& y = at(n);
        const auto s = crystal_.structure(y, ws_);
        auto where = [&] { return "xi=" + point_string(xi) + " n=" + std::to_string(n); };
        eps_law_[i].record(s[3 + i] == base[3 + i] - n, where);
        bool wt_ok = true;
        for (int j = 0; j < 3; ++j) wt_ok = wt_ok && s[j] == base[j] + n * a_.entry(i, j);
        wt_law_[i].record(wt_ok, where);
        for (std::int64_t m = lo; m <= hi; ++m) {
          additivity_[i].record(crystal_.e(i, m, y, ws_) == at(m + n), [&] {
            return "xi=" + point_string(xi) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
          });
        }
      }
    }
    // The first factor applied is e_node^{p m + q n} xi, already in moved_
    // whenever that step lies in [2lo, 2hi].
    first_ = [this, lo, hi](int node, std::int64_t step) -> const LatticePoint* {
      if (step < 2 * lo || step > 2 * hi) return nullptr;
      return &moved_[static_cast<std::size_t>(node)][static_cast<std::size_t>(step - 2 * lo)];
    };
    for (std::int64_t m = lo; m <= hi; ++m) {
      for (std::int64_t n = lo; n <= hi; ++n) verma_at(xi, m, n);
    }
    first_ = nullptr;
  }

  /// One random step per law at xi.
  void at_random_point(const LatticePoint& xi, std::int64_t m, std::int64_t n) {
    const auto base = crystal_.structure(xi, ws_);
    for (int i = 0; i < 3; ++i) {
      const LatticePoint y = crystal_.e(i, n, xi, ws_);
      const auto s = crystal_.structure(y, ws_);
      auto where = [&] { return "xi=" + point_string(xi) + " n=" + std::to_string(n); };
      eps_law_[i].record(s[3 + i] == base[3 + i] - n, where);
      bool wt_ok = true;
      for (int j = 0; j < 3; ++j) wt_ok = wt_ok && s[j] == base[j] + n * a_.entry(i, j);
      wt_law_[i].record(wt_ok, where);
      additivity_[i].record(crystal_.e(i, m, y, ws_) == crystal_.e(i, m + n, xi, ws_), [&] {
        return "xi=" + point_string(xi) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
      });
    }
    verma_at(xi, m, n);
  }

  void merge(const Sweeper& other) {
    for (std::size_t i = 0; i < 3; ++i) {
      eps_law_[i].merge(other.eps_law_[i]);
      wt_law_[i].merge(other.wt_law_[i]);
      additivity_[i].merge(other.additivity_[i]);
      verma_[i].merge(other.verma_[i]);
    }
  }

  std::vector<Tally> tallies() const {
    std::vector<Tally> out;
    for (int i = 0; i < 3; ++i) {
      out.push_back(eps_law_[i]);
      out.push_back(wt_law_[i]);
      out.push_back(additivity_[i]);
    }
    for (const auto& v : verma_) out.push_back(v);
    return out;
  }

 private:
  LatticePoint apply(const std::vector<VermaFactor>& side, const LatticePoint& xi, std::int64_t m, std::int64_t n) {
    auto it = side.rbegin();
    const std::int64_t step = it->p * m + it->q * n;
    const LatticePoint* cached = first_ ? first_(it->node, step) : nullptr;
    LatticePoint p = cached ? *cached : crystal_.e(it->node, step, xi, ws_);
    for (++it; it != side.rend(); ++it) p = crystal_.e(it->node, it->p * m + it->q * n, p, ws_);
    return p;
  }

  void verma_at(const LatticePoint& xi, std::int64_t m, std::int64_t n) {
    for (std::size_t k = 0; k < 3; ++k) {
      verma_[k].record(apply(relations_[k].lhs, xi, m, n) == apply(relations_[k].rhs, xi, m, n), [&] {
        return "xi=" + point_string(xi) + " c1=" + std::to_string(m) + " c2=" + std::to_string(n);
      });
    }
  }

  const TropicalCrystal& crystal_;
  const CartanMatrix& a_;
  TropicalCrystal::Workspace ws_;
  std::array<std::vector<LatticePoint>, 3> moved_;
  std::function<const LatticePoint*(int, std::int64_t)> first_;
  std::array<Tally, 3> eps_law_, wt_law_, additivity_;
  std::array<std::pair<int, int>, 3> verma_pairs_;
  std::array<VermaRelation, 3> relations_;
  std::array<Tally, 3> verma_;
};

}  // namespace

VerificationReport check_crystal_axioms(const TropicalCrystal& crystal, const CrystalSweepConfig& cfg) {
  if (cfg.box_radius < 0 || cfg.step_radius < 0 || cfg.sample_radius < 0 || cfg.sample_step_radius < 0) {
    throw Error(ErrorCode::kConfigError, "sweep radii must be nonnegative");
  }
  const auto start = std::chrono::steady_clock::now();

  // Slabs of the box by first coordinate, one sweeper per slab; merged in slab
  // order so counts and witnesses do not depend on the thread count.
  const std::int64_t r = cfg.box_radius;
  const auto slabs = static_cast<std::size_t>(2 * r + 1);
  std::vector<Sweeper> slab_sweeps(slabs, Sweeper(crystal));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t s = next++; s < slabs; s = next++) {
      LatticePoint xi;
      xi.fill(-r);
      xi[0] = -r + static_cast<std::int64_t>(s);
      for (;;) {
        slab_sweeps[s].at_point(xi, -cfg.step_radius, cfg.step_radius);
        std::size_t k = 1;
        while (k < xi.size() && xi[k] == r) xi[k++] = -r;
        if (k == xi.size()) break;
        ++xi[k];
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, slabs);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::size_t box_points = 1;
  for (int k = 0; k < 6; ++k) box_points *= slabs;

  Sweeper sweep(crystal);
  for (const auto& s : slab_sweeps) sweep.merge(s);

  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::int64_t> coord(-cfg.sample_radius, cfg.sample_radius);
  std::uniform_int_distribution<std::int64_t> step(-cfg.sample_step_radius, cfg.sample_step_radius);
  LatticePoint xi;
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    for (auto& v : xi) v = coord(rng);
    const std::int64_t m = step(rng);
    sweep.at_random_point(xi, m, step(rng));
  }

  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream scope;
  scope << "box [-" << r << "," << r << "]^6 (" << box_points << " points) with steps -" << cfg.step_radius << ".."
        << cfg.step_radius << ", plus " << cfg.samples << " random points in [-" << cfg.sample_radius << ","
        << cfg.sample_radius << "]^6 with steps -" << cfg.sample_step_radius << ".." << cfg.sample_step_radius;

  VerificationReport report{"tropical.axioms", {}};
  for (const Tally& t : sweep.tallies()) {
    CheckResult c;
    c.name = t.name;
    c.mode = CheckMode::kExhaustive;
    c.trials = t.trials;
    c.seed = cfg.seed;
    c.status = t.failures == 0 ? CheckStatus::kPass : CheckStatus::kFail;
    if (t.failures) c.witness = t.witness;
    c.detail = scope.str() + "; " + std::to_string(t.failures) + " failures";
    c.wall_time_ms = ms;
    report.append(std::move(c));
  }
  return report;
}

namespace {

CheckResult oracle_check(const std::string& name, std::size_t samples, std::uint64_t seed,
                         const std::vector<PLExpression>& pl, const std::vector<RationalFunction>& rf, bool with_step) {
  return timed_check(name, CheckMode::kRandomized, [&](CheckResult& out) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coord(-10, 10), step(-5, 5);
    out.trials = samples;
    out.seed = seed;
    out.detail = "PL value against the valuation of the exact function along x = t^xi";
    for (std::size_t s = 0; s < samples; ++s) {
      LatticePoint xi;
      for (auto& v : xi) v = coord(rng);
      const Cocharacter point = to_cocharacter(xi, with_step ? step(rng) : 0);
      for (std::size_t k = 0; k < pl.size(); ++k) {
        const std::int64_t got = pl[k].evaluate(point);
        const std::int64_t want = valuation_along(rf[k], point);
        if (got != want) {
          out.status = CheckStatus::kFail;
          out.witness = "xi=" + point_string(xi) + " step=" + std::to_string(point.at(vars::c())) + " component " +
                        std::to_string(k) + ": PL " + std::to_string(got) + ", oracle " + std::to_string(want);
          return;
        }
      }
    }
    out.status = CheckStatus::kPass;
  });
}

}  // namespace

VerificationReport check_oracle_agreement(const TropicalCrystal& crystal, std::size_t samples, std::uint64_t seed) {
  VerificationReport report{"tropical.oracle", {}};
  for (int i = 0; i < 3; ++i) {
    const std::string n = std::to_string(i);
    report.append(oracle_check("tropical.oracle.e" + n, samples, seed + i, crystal.action(i), crystal.action_source(i),
                               true));
    report.append(oracle_check("tropical.oracle.wt" + n, samples, seed + 10 + i, {crystal.wt(i)},
                               {crystal.wt_source(i)}, false));
    report.append(oracle_check("tropical.oracle.eps" + n, samples, seed + 20 + i, {crystal.eps(i)},
                               {crystal.eps_source(i)}, false));
  }

  // trop(sigma^{-1} o e0 o sigma) = trop(sigma^{-1}) o trop(e0) o trop(sigma).
  report.append(timed_check("tropical.functoriality.e0", CheckMode::kRandomized, [&](CheckResult& out) {
    const ChartMaps& maps = ChartMaps::embedded();
    std::vector<PLExpression> sigma, inverse, bar_e0;
    for (const auto& f : maps.sigma) sigma.push_back(tropicalize(f));
    for (const auto& f : maps.inverse) inverse.push_back(tropicalize(f));
    const auto moved = e_action(v2_word_point(symbolic_y()), 0, RationalFunction::variable(vars::c()));
    for (const auto& f : v2_coords(moved)) bar_e0.push_back(tropicalize(f));

    std::mt19937_64 rng(seed + 30);
    std::uniform_int_distribution<std::int64_t> coord(-10, 10), step(-5, 5);
    out.trials = samples;
    out.seed = seed + 30;
    out.detail = "closed-form e0 against the composite of the tropicalized chart maps";
    for (std::size_t s = 0; s < samples; ++s) {
      LatticePoint xi;
      for (auto& v : xi) v = coord(rng);
      const std::int64_t n = step(rng);
      Cocharacter eta{{vars::c(), n}};
      const Cocharacter x = to_cocharacter(xi, n);
      for (int k = 0; k < 6; ++k) eta[vars::y(k)] = sigma[static_cast<std::size_t>(k)].evaluate(x);
      Cocharacter eta2{};
      for (int k = 0; k < 6; ++k) eta2[vars::y(k)] = bar_e0[static_cast<std::size_t>(k)].evaluate(eta);
      const LatticePoint direct = crystal.e(0, n, xi);
      for (int k = 0; k < 6; ++k) {
        const std::int64_t composed = inverse[static_cast<std::size_t>(k)].evaluate(eta2);
        if (composed != direct[static_cast<std::size_t>(k)]) {
          out.status = CheckStatus::kFail;
          out.witness = "xi=" + point_string(xi) + " n=" + std::to_string(n) + " component " + std::to_string(k);
          return;
        }
      }
    }
    out.status = CheckStatus::kPass;
  }));
  return report;
}

VerificationReport check_positivity(const FormulaTable& table) {
  VerificationReport report{"positivity", {}};
  auto certify = [&](const std::string& name, const std::vector<RationalFunction>& fs) {
    report.append(timed_check(name, CheckMode::kSymbolic, [&](CheckResult& out) {
      out.trials = fs.size();
      out.detail = std::to_string(fs.size()) + " functions, coefficients of stored numerator and denominator";
      for (std::size_t k = 0; k < fs.size(); ++k) {
        const PositivityResult p = check_positive(fs[k]);
        if (!p.verified()) {
          out.status = CheckStatus::kInconclusive;
          out.witness = "component " + std::to_string(k) + ": " + p.reason;
          return;
        }
      }
      out.status = CheckStatus::kPass;
    }));
  };
  auto named = [&](const std::string& prefix) {
    std::vector<RationalFunction> fs;
    for (int k = 0; k < 6; ++k) fs.push_back(table.get(prefix + std::to_string(k)));
    return fs;
  };

  certify("positivity.sigma", named("sigma"));
  certify("positivity.sigma_inverse", named("inv"));
  certify("positivity.e0", named("e0x"));
  const RationalFunction c = RationalFunction::variable(vars::c());
  const auto x = symbolic_x();
  certify("positivity.e0.second_chart", v2_coords(e_action(v2_word_point(symbolic_y()), 0, c)));
  for (int i = 1; i < 3; ++i) certify("positivity.e" + std::to_string(i), chart1_e(x, i, c));
  certify("positivity.action_factors", {table.get("C1"), table.get("C2"), table.get("C3"), table.get("C4"),
                                         table.get("C5")});
  std::vector<RationalFunction> gammas, epsilons;
  for (int i = 0; i < 3; ++i) {
    gammas.push_back(table.get("gamma" + std::to_string(i)));
    epsilons.push_back(table.get("epsilon" + std::to_string(i)));
  }
  certify("positivity.gamma", gammas);
  certify("positivity.epsilon", epsilons);
  return report;
}

}  // namespace geocrystal
