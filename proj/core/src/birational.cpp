#include "geocrystal/birational.hpp"

#include <string>

namespace geocrystal {

std::vector<VarId> x_vars() {
  std::vector<VarId> v;
  for (int k = 0; k < 6; ++k) v.push_back(vars::x(k));
  return v;
}

std::vector<VarId> y_vars() {
  std::vector<VarId> v;
  for (int k = 0; k < 6; ++k) v.push_back(vars::y(k));
  return v;
}

ChartMaps ChartMaps::from(const FormulaTable& table) {
  ChartMaps m;
  for (int k = 0; k < 6; ++k) {
    m.sigma.push_back(table.get("sigma" + std::to_string(k)));
    m.inverse.push_back(table.get("inv" + std::to_string(k)));
    m.e0_closed.push_back(table.get("e0x" + std::to_string(k)));
  }
  m.a = table.get("a");
  m.gamma0 = table.get("gamma0");
  m.epsilon0 = table.get("epsilon0");
  return m;
}

const ChartMaps& ChartMaps::embedded() {
  static const ChartMaps m = from(FormulaTable::embedded());
  return m;
}

namespace {

std::vector<Rational> coords_of(const EvalPoint& p, const std::vector<VarId>& vars) {
  std::vector<Rational> out;
  for (VarId v : vars) out.push_back(p.at(v));
  return out;
}

SampleSpace x_space(bool with_c = false, bool with_d = false) {
  SampleSpace s;
  s.coordinates = x_vars();
  if (with_c) s.parameters.push_back(vars::c());
  if (with_d) s.parameters.push_back(vars::d());
  return s;
}

SampleSpace y_space() {
  SampleSpace s;
  s.coordinates = y_vars();
  return s;
}

// Randomized check of a vector identity; `mismatch` returns the index of the
// first differing component, or -1.
CheckResult randomized_vector_check(std::string name, const SampleSpace& space, const CheckConfig& cfg,
                                    const std::function<int(const EvalPoint&)>& mismatch) {
  return timed_check(std::move(name), CheckMode::kRandomized, [&](CheckResult& r) {
    int bad = -1;
    const RandomizedOutcome o = check_at_random_points(
        [&](const EvalPoint& p) {
          bad = mismatch(p);
          return bad < 0;
        },
        space, cfg.trials, cfg.seed);
    record(r, o);
    if (!o.equal) r.detail = "component " + std::to_string(bad) + " differs";
  });
}

template <class F>
int first_difference(const std::vector<F>& a, const std::vector<F>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!field_equal(a[k], b[k])) return static_cast<int>(k);
  }
  return -1;
}

const ModuleVector& symbolic_V1() {
  static const ModuleVector v = build_V1(symbolic_x());
  return v;
}

const ModuleVector& symbolic_V2() {
  static const ModuleVector v = build_V2(symbolic_y());
  return v;
}

constexpr std::array<const char*, kModuleDim> kXNames = {"X1", "X2", "X3", "X0", "Xe", "X3b", "X2b", "X1b"};
constexpr std::array<const char*, kModuleDim> kYNames = {"Y1", "Y2", "Y3", "Y0", "Ye", "Y3b", "Y2b", "Y1b"};

}  // namespace

std::vector<CheckResult> verify_transcribed_coefficients() {
  std::vector<CheckResult> out;
  const FormulaTable& table = FormulaTable::embedded();
  for (std::size_t m = 0; m < kModuleDim; ++m) {
    const std::string label(label_name(kBasis[m]));
    out.push_back(timed_check("module.coefficients.V1." + label, CheckMode::kSymbolic, [&](CheckResult& r) {
      if (!equal_symbolic(symbolic_V1()[m], table.get(kXNames[m]))) {
        r.status = CheckStatus::kFail;
        r.witness = "expanded " + symbolic_V1()[m].to_string();
      }
    }));
    out.push_back(timed_check("module.coefficients.V2." + label, CheckMode::kSymbolic, [&](CheckResult& r) {
      if (!equal_symbolic(symbolic_V2()[m], table.get(kYNames[m]))) {
        r.status = CheckStatus::kFail;
        r.witness = "expanded " + symbolic_V2()[m].to_string();
      }
    }));
  }
  return out;
}

std::vector<CheckResult> verify_defining_equation(const CheckConfig& cfg) {
  std::vector<CheckResult> out;
  const ChartMaps& maps = ChartMaps::embedded();
  if (cfg.mode == ModePreference::kRandomized) {
    for (std::size_t m = 0; m < kModuleDim; ++m) {
      const std::string label(label_name(kBasis[m]));
      out.push_back(randomized_vector_check("sigma.defining." + label, x_space(), cfg, [&](const EvalPoint& p) {
        const std::vector<Rational> x = coords_of(p, x_vars());
        const Rational lhs = build_V2(sigma_bar(x))[m];
        const Rational rhs = sigma_a(x) * build_V1(x)[m];
        return lhs == rhs ? -1 : static_cast<int>(m);
      }));
    }
    return out;
  }
  const Substitution sub = make_binding(y_vars(), maps.sigma);
  for (std::size_t m = 0; m < kModuleDim; ++m) {
    const std::string label(label_name(kBasis[m]));
    out.push_back(timed_check("sigma.defining." + label, CheckMode::kSymbolic, [&](CheckResult& r) {
      const RationalFunction lhs = substitute(symbolic_V2()[m], sub);
      const RationalFunction rhs = maps.a * symbolic_V1()[m];
      if (!equal_symbolic(lhs, rhs)) {
        r.status = CheckStatus::kFail;
        r.witness = "Y(sigma(x)) - a(x) X(x) is not the zero function";
      }
    }));
  }
  return out;
}

std::vector<CheckResult> verify_round_trips(const CheckConfig& cfg) {
  std::vector<CheckResult> out;
  const ChartMaps& maps = ChartMaps::embedded();
  out.push_back(randomized_vector_check("sigma.round_trip.inverse_after_sigma", x_space(), cfg,
                                        [&](const EvalPoint& p) {
                                          const std::vector<Rational> x = coords_of(p, x_vars());
                                          return first_difference(sigma_bar_inverse(sigma_bar(x)), x);
                                        }));
  out.push_back(randomized_vector_check("sigma.round_trip.sigma_after_inverse", y_space(), cfg,
                                        [&](const EvalPoint& p) {
                                          const std::vector<Rational> y = coords_of(p, y_vars());
                                          return first_difference(sigma_bar(sigma_bar_inverse(y)), y);
                                        }));
  if (cfg.mode == ModePreference::kRandomized) return out;
  out.push_back(timed_check("sigma.round_trip.x0_symbolic", CheckMode::kSymbolic, [&](CheckResult& r) {
    const RationalFunction x0 = substitute(maps.inverse[0], make_binding(y_vars(), maps.sigma));
    if (!equal_symbolic(x0, RationalFunction::variable(vars::x(0)))) {
      r.status = CheckStatus::kFail;
      r.witness = "inv0(sigma(x)) != x0";
    }
  }));
  out.push_back(timed_check("sigma.round_trip.y0_symbolic", CheckMode::kSymbolic, [&](CheckResult& r) {
    const RationalFunction y0 = substitute(maps.sigma[0], make_binding(x_vars(), maps.inverse));
    if (!equal_symbolic(y0, RationalFunction::variable(vars::y(0)))) {
      r.status = CheckStatus::kFail;
      r.witness = "sigma0(inv(y)) != y0";
    }
  }));
  return out;
}

std::vector<CheckResult> verify_e0(const CheckConfig& cfg) {
  std::vector<CheckResult> out;
  const ChartMaps& maps = ChartMaps::embedded();
  for (int k = 0; k < 6; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    out.push_back(randomized_vector_check(
        "e0.closed_form.x" + std::to_string(k), x_space(true), cfg, [&](const EvalPoint& p) {
          const std::vector<Rational> x = coords_of(p, x_vars());
          const Rational c = p.at(vars::c());
          return induced_e0(x, c)[kk] == plug_in(maps.e0_closed[kk], p) ? -1 : k;
        }));
  }
  const bool symbolic = cfg.mode != ModePreference::kRandomized;
  if (symbolic) {
    out.push_back(timed_check("e0.gamma0_pullback", CheckMode::kSymbolic, [&](CheckResult& r) {
      if (!equal_symbolic(induced_gamma0(symbolic_x()), maps.gamma0)) {
        r.status = CheckStatus::kFail;
        r.witness = "gamma0(sigma(x)) != closed form";
      }
    }));
    out.push_back(timed_check("e0.epsilon0_pullback", CheckMode::kSymbolic, [&](CheckResult& r) {
      if (!equal_symbolic(induced_epsilon0(symbolic_x()), maps.epsilon0)) {
        r.status = CheckStatus::kFail;
        r.witness = "epsilon0(sigma(x)) != closed form";
      }
    }));
  } else {
    out.push_back(randomized_vector_check("e0.gamma0_pullback", x_space(), cfg, [&](const EvalPoint& p) {
      return induced_gamma0(coords_of(p, x_vars())) == plug_in(maps.gamma0, p) ? -1 : 0;
    }));
    out.push_back(randomized_vector_check("e0.epsilon0_pullback", x_space(), cfg, [&](const EvalPoint& p) {
      return induced_epsilon0(coords_of(p, x_vars())) == plug_in(maps.epsilon0, p) ? -1 : 0;
    }));
  }
  out.push_back(randomized_vector_check("e0.unit_parameter", x_space(), cfg, [&](const EvalPoint& p) {
    const std::vector<Rational> x = coords_of(p, x_vars());
    return first_difference(induced_e0(x, Rational(1)), x);
  }));
  out.push_back(randomized_vector_check("e0.additivity", x_space(true, true), cfg, [&](const EvalPoint& p) {
    const std::vector<Rational> x = coords_of(p, x_vars());
    const Rational c = p.at(vars::c());
    const Rational d = p.at(vars::d());
    return first_difference(induced_e0(induced_e0(x, d), c), induced_e0(x, c * d));
  }));
  return out;
}

std::vector<CheckResult> verify_intertwiner(const CheckConfig& cfg) {
  std::vector<CheckResult> out;
  out.push_back(randomized_vector_check("intertwiner.e1", x_space(true), cfg, [&](const EvalPoint& p) {
    const std::vector<Rational> x = coords_of(p, x_vars());
    const Rational c = p.at(vars::c());
    const std::vector<Rational> lhs = sigma_bar(chart1_e(x, 1, c));
    const std::vector<Rational> rhs = v2_coords(e_action(v2_word_point(sigma_bar(x)), 1, c));
    return first_difference(lhs, rhs);
  }));
  out.push_back(randomized_vector_check("intertwiner.unit_parameter", x_space(), cfg, [&](const EvalPoint& p) {
    const std::vector<Rational> x = coords_of(p, x_vars());
    const std::vector<Rational> lhs = sigma_bar(chart1_e(x, 1, Rational(1)));
    return first_difference(lhs, sigma_bar(x));
  }));
  if (cfg.mode == ModePreference::kRandomized) {
    out.push_back(randomized_vector_check("intertwiner.gamma1", x_space(), cfg, [&](const EvalPoint& p) {
      const std::vector<Rational> x = coords_of(p, x_vars());
      return gamma(TorusWordT<Rational>{word_w1(), x}, 1) == gamma(v2_word_point(sigma_bar(x)), 1) ? -1 : 0;
    }));
  } else {
    out.push_back(timed_check("intertwiner.gamma1", CheckMode::kSymbolic, [&](CheckResult& r) {
      const std::vector<RationalFunction> x = symbolic_x();
      if (!equal_symbolic(gamma(TorusWord{word_w1(), x}, 1), gamma(v2_word_point(sigma_bar(x)), 1))) {
        r.status = CheckStatus::kFail;
        r.witness = "gamma1(x) != gamma1(sigma(x))";
      }
    }));
  }
  return out;
}

RationalFunction derive_e0_component(int k, const ChartMaps& m) {
  std::vector<RationalFunction> y = m.sigma;
  y[0] = y[0] * RationalFunction::variable(vars::c());
  RationalFunction f = substitute(m.inverse.at(static_cast<std::size_t>(k)), make_binding(y_vars(), y));
  const FormulaTable& table = FormulaTable::embedded();
  for (const char* name : {"P", "Q", "R", "S", "anum", "D", "E", "F", "G", "H"}) {
    f = f.cancel_factor(table.polynomial(name));
  }
  return f;
}

}  // namespace geocrystal
