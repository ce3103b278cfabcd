#include "geocrystal/axioms.hpp"

#include <algorithm>

#include "geocrystal/binding.hpp"
#include "geocrystal/birational.hpp"
#include "geocrystal/torus_chart.hpp"

namespace geocrystal {

namespace {

template <class F>
CrystalOps<F> torus_ops(const ReducedWord& word) {
  CrystalOps<F> ops;
  ops.e = [word](const std::vector<F>& x, int i, const F& c) { return e_action(TorusWordT<F>{word, x}, i, c).coords; };
  ops.gamma = [word](const std::vector<F>& x, int i) { return gamma(TorusWordT<F>{word, x}, i); };
  ops.epsilon = [word](const std::vector<F>& x, int i) { return epsilon(TorusWordT<F>{word, x}, i); };
  return ops;
}

std::vector<RationalFunction> symbols(const std::vector<VarId>& vars) {
  std::vector<RationalFunction> out;
  for (VarId v : vars) out.push_back(RationalFunction::variable(v));
  return out;
}

std::vector<Rational> coords_of(const EvalPoint& p, const std::vector<VarId>& vars) {
  std::vector<Rational> out;
  for (VarId v : vars) out.push_back(p.at(v));
  return out;
}

template <class F>
int first_difference(const std::vector<F>& a, const std::vector<F>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!field_equal(a[k], b[k])) return static_cast<int>(k);
  }
  return -1;
}

bool has(const std::vector<int>& nodes, int i) { return std::find(nodes.begin(), nodes.end(), i) != nodes.end(); }

// `actions` must act symbolically, `structure` needs symbolic gamma/epsilon.
bool use_symbolic(const CrystalModel& m, std::initializer_list<int> actions, std::initializer_list<int> structure,
                  const CheckConfig& cfg, bool verma) {
  if (cfg.mode == ModePreference::kRandomized) return false;
  for (int i : actions) {
    if (!has(m.symbolic_nodes, i)) return false;
  }
  for (int i : structure) {
    if (!has(m.symbolic_structure_nodes, i)) return false;
  }
  // Without polynomial gcds the composed sides of a Verma relation swell past
  // memory on longer words, so even a symbolic request runs them randomized.
  return !verma || m.verma_symbolic_by_default;
}

// An identity between two coordinate vectors (or a single function, as a
// one-element vector) depending on the point and the parameters c, d.
template <class F>
using Sides = std::function<std::pair<std::vector<F>, std::vector<F>>(const std::vector<F>& x, const F& c, const F& d)>;

CheckResult run_identity(const std::string& name, const CrystalModel& m, bool symbolic, bool needs_d,
                         const CheckConfig& cfg, const Sides<Rational>& numeric,
                         const Sides<RationalFunction>& sym) {
  if (symbolic) {
    return timed_check(name, CheckMode::kSymbolic, [&](CheckResult& r) {
      const auto [lhs, rhs] = sym(symbols(m.coordinates), RationalFunction::variable(vars::c()),
                                  RationalFunction::variable(vars::d()));
      const int bad = first_difference(lhs, rhs);
      if (bad >= 0) {
        r.status = CheckStatus::kFail;
        r.witness = "component " + std::to_string(bad) + ": " + lhs[static_cast<std::size_t>(bad)].to_string() +
                    " vs " + rhs[static_cast<std::size_t>(bad)].to_string();
      }
    });
  }
  return timed_check(name, CheckMode::kRandomized, [&](CheckResult& r) {
    SampleSpace space;
    space.coordinates = m.coordinates;
    space.parameters = {vars::c()};
    if (needs_d) space.parameters.push_back(vars::d());
    int bad = -1;
    const RandomizedOutcome o = check_at_random_points(
        [&](const EvalPoint& p) {
          const Rational d = needs_d ? p.at(vars::d()) : Rational(1);
          const auto [lhs, rhs] = numeric(coords_of(p, m.coordinates), p.at(vars::c()), d);
          bad = first_difference(lhs, rhs);
          return bad < 0;
        },
        space, cfg.trials, cfg.seed);
    record(r, o);
    if (!o.equal) r.detail = "component " + std::to_string(bad) + " differs";
  });
}

std::string check_name(const CrystalModel& m, const std::string& kind, std::initializer_list<int> nodes) {
  std::string out = "axioms." + m.name + "." + kind + ".";
  for (int i : nodes) out += std::to_string(i);
  return out;
}

template <class F>
F parameter(const VermaFactor& f, const F& c1, const F& c2) {
  return power(c1, f.p) * power(c2, f.q);
}

template <class F>
std::vector<F> apply_word(const CrystalOps<F>& ops, std::vector<F> x, const std::vector<VermaFactor>& seq,
                          const F& c1, const F& c2) {
  for (std::size_t k = seq.size(); k-- > 0;) x = ops.e(x, seq[k].node, parameter(seq[k], c1, c2));
  return x;
}

}  // namespace

CrystalModel torus_chart_model(std::string name, const ReducedWord& word, std::vector<VarId> coordinates,
                               std::vector<int> nodes) {
  CrystalModel m;
  m.name = std::move(name);
  m.nodes = nodes;
  m.coordinates = std::move(coordinates);
  m.numeric = torus_ops<Rational>(word);
  m.symbolic = torus_ops<RationalFunction>(word);
  m.symbolic_nodes = nodes;
  m.symbolic_structure_nodes = std::move(nodes);
  m.verma_symbolic_by_default = word.size() <= kSymbolicVermaMaxLength && word.distinct_letters() <= 2;
  return m;
}

CrystalModel chart_w1_model(std::vector<int> nodes) {
  return torus_chart_model("w1", word_w1(), x_vars(), std::move(nodes));
}

CrystalModel chart_w2_model(std::vector<int> nodes) {
  std::vector<VarId> along;
  for (int k : kV2CoordinateOrder) along.push_back(vars::y(k));
  return torus_chart_model("w2", word_w2(), std::move(along), std::move(nodes));
}

CrystalModel v1_model() {
  CrystalModel m = chart_w1_model({0, 1, 2});
  m.name = "V1";
  m.symbolic_nodes = {1, 2};
  m.symbolic_structure_nodes = {0, 1, 2};
  m.verma_symbolic_by_default = false;

  const CrystalOps<Rational> chart = m.numeric;
  m.numeric.e = [chart](const std::vector<Rational>& x, int i, const Rational& c) {
    return i == 0 ? induced_e0(x, c) : chart.e(x, i, c);
  };
  m.numeric.gamma = [chart](const std::vector<Rational>& x, int i) {
    return i == 0 ? induced_gamma0(x) : chart.gamma(x, i);
  };
  m.numeric.epsilon = [chart](const std::vector<Rational>& x, int i) {
    return i == 0 ? induced_epsilon0(x) : chart.epsilon(x, i);
  };

  // Symbolically node 0 enters only through gamma0 and epsilon0, in their
  // closed forms (equal to the pullbacks, checked in the e0 suite).
  const CrystalOps<RationalFunction> sym = m.symbolic;
  m.symbolic.gamma = [sym](const std::vector<RationalFunction>& x, int i) {
    return i == 0 ? plug_in(ChartMaps::embedded().gamma0, make_binding(x_vars(), x)) : sym.gamma(x, i);
  };
  m.symbolic.epsilon = [sym](const std::vector<RationalFunction>& x, int i) {
    return i == 0 ? plug_in(ChartMaps::embedded().epsilon0, make_binding(x_vars(), x)) : sym.epsilon(x, i);
  };
  return m;
}

VermaRelation verma_relation(int i, int j, const CartanMatrix& a) {
  const int aij = a.entry(i, j);
  const int aji = a.entry(j, i);
  if (aij == 0 && aji == 0) return {{{i, 1, 0}, {j, 0, 1}}, {{j, 0, 1}, {i, 1, 0}}};
  if (aij == -1 && aji == -1) {
    return {{{i, 1, 0}, {j, 1, 1}, {i, 0, 1}}, {{j, 0, 1}, {i, 1, 1}, {j, 1, 0}}};
  }
  if (aij == -2 && aji == -1) {
    return {{{i, 1, 0}, {j, 2, 1}, {i, 1, 1}, {j, 0, 1}}, {{j, 0, 1}, {i, 1, 1}, {j, 2, 1}, {i, 1, 0}}};
  }
  if (aij == -3 && aji == -1) {
    return {{{i, 1, 0}, {j, 3, 1}, {i, 2, 1}, {j, 3, 2}, {i, 1, 1}, {j, 0, 1}},
            {{j, 0, 1}, {i, 1, 1}, {j, 3, 2}, {i, 2, 1}, {j, 3, 1}, {i, 1, 0}}};
  }
  if ((aij == -1 && aji == -2) || (aij == -1 && aji == -3)) return verma_relation(j, i, a);
  throw Error(ErrorCode::kUnsupportedCartanPattern,
              "no Verma relation for (a_ij, a_ji) = (" + std::to_string(aij) + ", " + std::to_string(aji) + ")");
}

CheckResult check_axiom_ii(const CrystalModel& m, int i, int j, const CheckConfig& cfg) {
  const int aij = d43_cartan().entry(i, j);
  auto sides = [&](const auto& ops) {
    return [&ops, i, j, aij](const auto& x, const auto& c, const auto&) {
      using F = std::decay_t<decltype(c)>;
      return std::make_pair(std::vector<F>{ops.gamma(ops.e(x, i, c), j)},
                            std::vector<F>{power(c, aij) * ops.gamma(x, j)});
    };
  };
  return run_identity(check_name(m, "ii", {i, j}), m, use_symbolic(m, {i}, {j}, cfg, false), false, cfg,
                      sides(m.numeric), sides(m.symbolic));
}

CheckResult check_axiom_iv(const CrystalModel& m, int i, const CheckConfig& cfg) {
  auto sides = [&](const auto& ops) {
    return [&ops, i](const auto& x, const auto& c, const auto&) {
      using F = std::decay_t<decltype(c)>;
      return std::make_pair(std::vector<F>{ops.epsilon(ops.e(x, i, c), i)},
                            std::vector<F>{ops.epsilon(x, i) / c});
    };
  };
  return run_identity(check_name(m, "iv", {i}), m, use_symbolic(m, {i}, {i}, cfg, false), false, cfg, sides(m.numeric),
                      sides(m.symbolic));
}

CheckResult check_verma(const CrystalModel& m, int i, int j, const CheckConfig& cfg) {
  const VermaRelation rel = verma_relation(i, j);
  auto sides = [&](const auto& ops) {
    return [&ops, &rel](const auto& x, const auto& c, const auto& d) {
      return std::make_pair(apply_word(ops, x, rel.lhs, c, d), apply_word(ops, x, rel.rhs, c, d));
    };
  };
  CheckResult r = run_identity(check_name(m, "verma", {i, j}), m, use_symbolic(m, {i, j}, {}, cfg, true), true, cfg,
                               sides(m.numeric), sides(m.symbolic));
  if (r.detail.empty()) r.detail = std::to_string(rel.lhs.size()) + " factors per side";
  return r;
}

CheckResult check_additivity(const CrystalModel& m, int i, const CheckConfig& cfg) {
  auto sides = [&](const auto& ops) {
    return [&ops, i](const auto& x, const auto& c, const auto& d) {
      return std::make_pair(ops.e(ops.e(x, i, d), i, c), ops.e(x, i, c * d));
    };
  };
  return run_identity(check_name(m, "additivity", {i}), m, use_symbolic(m, {i}, {}, cfg, false), true, cfg,
                      sides(m.numeric), sides(m.symbolic));
}

CheckResult check_unit(const CrystalModel& m, int i, const CheckConfig& cfg) {
  auto sides = [&](const auto& ops) {
    return [&ops, i](const auto& x, const auto& c, const auto&) {
      using F = std::decay_t<decltype(c)>;
      return std::make_pair(ops.e(x, i, F(Rational(1))), x);
    };
  };
  return run_identity(check_name(m, "unit", {i}), m, use_symbolic(m, {i}, {}, cfg, false), false, cfg,
                      sides(m.numeric), sides(m.symbolic));
}

std::vector<CheckResult> check_all_axioms(const CrystalModel& m, const CheckConfig& cfg) {
  std::vector<CheckResult> out;
  for (int i : m.nodes) {
    for (int j : m.nodes) out.push_back(check_axiom_ii(m, i, j, cfg));
  }
  for (int i : m.nodes) {
    out.push_back(check_axiom_iv(m, i, cfg));
    out.push_back(check_additivity(m, i, cfg));
    out.push_back(check_unit(m, i, cfg));
  }
  for (std::size_t a = 0; a < m.nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < m.nodes.size(); ++b) out.push_back(check_verma(m, m.nodes[a], m.nodes[b], cfg));
  }
  return out;
}

}  // namespace geocrystal
