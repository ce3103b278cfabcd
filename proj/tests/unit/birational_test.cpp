#include <gtest/gtest.h>

#include "geocrystal/birational.hpp"
#include "test_util.hpp"

using namespace geocrystal;

namespace {

CheckConfig quick(std::size_t trials = 30) { return {ModePreference::kAuto, trials, 7}; }

std::vector<Rational> ones() { return std::vector<Rational>(6, Rational(1)); }

}  // namespace

TEST(Sigma, ValuesAtOnes) {
  const auto& t = FormulaTable::embedded();
  EXPECT_EQ(t.get("a").evaluate(all_ones()), Rational(9));
  EXPECT_EQ(t.get("P").evaluate(all_ones()), Rational(27));
  const std::vector<Rational> y = sigma_bar(ones());
  const std::vector<Rational> expect = {Rational(9),  Rational(27), Rational(27),
                                        Rational(2),  Rational(27), Rational(3, 2)};
  EXPECT_EQ(y, expect);
  EXPECT_EQ(sigma_a(ones()), Rational(9));
  EXPECT_EQ(sigma_bar_inverse(ones())[0], Rational(5));
  EXPECT_EQ(sigma_bar_inverse(ones())[2], Rational(450));
}

TEST(Sigma, FirstCoordinateIsA) {
  const auto& m = ChartMaps::embedded();
  EXPECT_TRUE(equal_symbolic(m.sigma[0] / rf("x0"), m.a));
}

TEST(Sigma, InverseOfOnesRoundTrips) {
  EXPECT_EQ(sigma_bar(sigma_bar_inverse(ones())), ones());
  EXPECT_EQ(sigma_bar_inverse(sigma_bar(ones())), ones());
}

TEST(Sigma, DefiningEquation) {
  const auto checks = verify_defining_equation(quick());
  EXPECT_EQ(checks.size(), 8u);
  for (const auto& c : checks) EXPECT_TRUE(c.passed()) << c.name << " " << c.detail;
}

TEST(Sigma, RoundTrips) {
  for (const auto& c : verify_round_trips(quick())) EXPECT_TRUE(c.passed()) << c.name;
}

TEST(InducedE0, ClosedFormAndPullbacks) {
  for (const auto& c : verify_e0(quick(20))) EXPECT_TRUE(c.passed()) << c.name << " " << c.detail;
}

TEST(InducedE0, UnitParameterOnOnes) {
  EXPECT_EQ(induced_e0(ones(), Rational(1)), ones());
  EXPECT_EQ(closed_form_e0(ones(), Rational(1)), ones());
}

TEST(InducedE0, AgreesWithClosedFormAtAPoint) {
  const std::vector<Rational> x = {Rational(2), Rational(3), Rational(5), Rational(7), Rational(11), Rational(13)};
  for (const Rational& c : {Rational(2), Rational(1, 3), Rational(17, 5)})
    EXPECT_EQ(induced_e0(x, c), closed_form_e0(x, c));
}

TEST(InducedE0, StructureAtOnes) {
  EXPECT_EQ(induced_gamma0(ones()), Rational(1));
  const auto& m = ChartMaps::embedded();
  EXPECT_EQ(induced_epsilon0(ones()), m.epsilon0.evaluate(all_ones()));
}

TEST(Intertwiner, CommutesWithNodeOne) {
  for (const auto& c : verify_intertwiner(quick())) EXPECT_TRUE(c.passed()) << c.name;
}

TEST(InducedE0, SymbolicDerivationOfFirstComponent) {
  const auto& m = ChartMaps::embedded();
  EXPECT_TRUE(equal_symbolic(derive_e0_component(0), m.e0_closed[0]));
}
