#pragma once

#include <vector>

#include "geocrystal/binding.hpp"
#include "geocrystal/cartan.hpp"
#include "geocrystal/formula_table.hpp"
#include "geocrystal/fundrep.hpp"
#include "geocrystal/identity.hpp"
#include "geocrystal/report.hpp"
#include "geocrystal/torus_chart.hpp"

namespace geocrystal {

/// The closed-form maps between the two charts, read from a formula table.
struct ChartMaps {
  std::vector<RationalFunction> sigma;    // y0..y5 as functions of x
  std::vector<RationalFunction> inverse;  // x0..x5 as functions of y
  RationalFunction a;
  std::vector<RationalFunction> e0_closed;  // e0x0..e0x5, functions of x and c
  RationalFunction gamma0;
  RationalFunction epsilon0;

  static ChartMaps from(const FormulaTable& table);
  static const ChartMaps& embedded();
};

/// Second-chart point in word order (y2, y1, y4, y3, y0, y5).
template <class F>
TorusWordT<F> v2_word_point(const std::vector<F>& y) {
  TorusWordT<F> p{word_w2(), {}};
  for (int k : kV2CoordinateOrder) p.coords.push_back(y.at(static_cast<std::size_t>(k)));
  return p;
}

template <class F>
std::vector<F> v2_coords(const TorusWordT<F>& p) {
  std::vector<F> y(6, F(Rational(0)));
  for (std::size_t k = 0; k < 6; ++k) y[static_cast<std::size_t>(kV2CoordinateOrder[k])] = p.coords[k];
  return y;
}

template <class F>
std::vector<F> sigma_bar(const std::vector<F>& x, const ChartMaps& m = ChartMaps::embedded()) {
  const auto b = make_binding(x_vars(), x);
  std::vector<F> y;
  for (const auto& f : m.sigma) y.push_back(plug_in(f, b));
  return y;
}

template <class F>
F sigma_a(const std::vector<F>& x, const ChartMaps& m = ChartMaps::embedded()) {
  return plug_in(m.a, make_binding(x_vars(), x));
}

template <class F>
std::vector<F> sigma_bar_inverse(const std::vector<F>& y, const ChartMaps& m = ChartMaps::embedded()) {
  const auto b = make_binding(y_vars(), y);
  std::vector<F> x;
  for (const auto& f : m.inverse) x.push_back(plug_in(f, b));
  return x;
}

/// e0^c on the first chart, defined as sigma^{-1} o (e0^c on the second chart) o sigma.
template <class F>
std::vector<F> induced_e0(const std::vector<F>& x, const F& c, const ChartMaps& m = ChartMaps::embedded()) {
  const TorusWordT<F> moved = e_action(v2_word_point(sigma_bar(x, m)), 0, c);
  return sigma_bar_inverse(v2_coords(moved), m);
}

/// The closed form e0x0..e0x5 evaluated at (x, c).
template <class F>
std::vector<F> closed_form_e0(const std::vector<F>& x, const F& c, const ChartMaps& m = ChartMaps::embedded()) {
  auto b = make_binding(x_vars(), x);
  bind(b, vars::c(), c);
  std::vector<F> out;
  for (const auto& f : m.e0_closed) out.push_back(plug_in(f, b));
  return out;
}

template <class F>
F induced_gamma0(const std::vector<F>& x, const ChartMaps& m = ChartMaps::embedded()) {
  return gamma(v2_word_point(sigma_bar(x, m)), 0);
}

template <class F>
F induced_epsilon0(const std::vector<F>& x, const ChartMaps& m = ChartMaps::embedded()) {
  return epsilon(v2_word_point(sigma_bar(x, m)), 0);
}

/// e_i^c for i = 1, 2 on the first chart.
template <class F>
std::vector<F> chart1_e(const std::vector<F>& x, int i, const F& c) {
  return e_action(TorusWordT<F>{word_w1(), x}, i, c).coords;
}

/// Y_m(sigma(x)) == a(x) X_m(x) for the eight basis coefficients, with X and Y
/// expanded from the Y operators.
std::vector<CheckResult> verify_defining_equation(const CheckConfig& cfg);
/// sigma^{-1} o sigma == id and sigma o sigma^{-1} == id, plus the symbolic
/// first-coordinate identities.
std::vector<CheckResult> verify_round_trips(const CheckConfig& cfg);
/// Induced e0 against the closed form, gamma0/epsilon0 pullbacks, c = 1,
/// additivity.
std::vector<CheckResult> verify_e0(const CheckConfig& cfg);
/// sigma o e1^c == e1^c o sigma and gamma1 == gamma1 o sigma.
std::vector<CheckResult> verify_intertwiner(const CheckConfig& cfg);
/// Expanded V1/V2 coefficients against the transcribed X and Y formulas.
std::vector<CheckResult> verify_transcribed_coefficients();

/// Symbolic composition sigma^{-1} o e0^c o sigma, component k, reduced by
/// the known factors of the closed form.
RationalFunction derive_e0_component(int k, const ChartMaps& m = ChartMaps::embedded());

}  // namespace geocrystal
