#include <gtest/gtest.h>

#include "geocrystal/axioms.hpp"
#include "geocrystal/birational.hpp"
#include "geocrystal/suites.hpp"
#include "geocrystal/torus_chart.hpp"
#include "test_util.hpp"

using namespace geocrystal;

namespace {

CheckConfig quick(std::size_t trials = 40) { return {ModePreference::kAuto, trials, 99}; }

TorusWordT<RationalFunction> w1_point() { return {word_w1(), symbolic_x()}; }

}  // namespace

TEST(TorusChart, UnitParameterIsIdentity) {
  const auto p = w1_point();
  for (int i = 1; i < 3; ++i) EXPECT_EQ(e_action(p, i, RationalFunction(1)).coords, p.coords);
}

TEST(TorusChart, EpsilonAndGamma) {
  const auto p = w1_point();
  EXPECT_TRUE(equal_symbolic(epsilon(p, 1), rf("x0/x1 + x0*x2/(x1^2*x3) + x0*x2*x4/(x1^2*x3^2*x5)")));
  EXPECT_TRUE(equal_symbolic(epsilon(p, 2), rf("x1^3/x2 + x1^3*x3^3/(x2^2*x4)")));
  EXPECT_EQ(gamma(p, 1), rf("x1^2*x3^2*x5^2/(x0*x2*x4)"));
  EXPECT_EQ(gamma(p, 2), rf("x2^2*x4^2/(x1^3*x3^3*x5^3)"));

  const TorusWordT<RationalFunction> single{make_word({0}), {rf("x0")}};
  EXPECT_EQ(epsilon(single, 0), rf("1/x0"));

  const TorusWordT<Rational> ones{word_w1(), std::vector<Rational>(6, Rational(1))};
  for (int i = 0; i < 3; ++i) EXPECT_EQ(gamma(ones, i), Rational(1));
}

TEST(TorusChart, ZeroDenominatorReported) {
  // Second position: c*before + t + after = c + 1.
  const TorusWordT<Rational> p{make_word({1, 1}), {Rational(1), Rational(1)}};
  try {
    (void)e_action(p, 1, Rational(-1));
    FAIL() << "expected ZeroDenominatorInUpdate";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroDenominatorInUpdate);
  }
}

TEST(TorusChart, ClosedFormsOnFirstChart) {
  for (const auto& c : verify_chart_closed_forms()) EXPECT_TRUE(c.passed()) << c.name;
}

TEST(Axioms, WeightLaw) {
  const CrystalModel w1 = chart_w1_model();
  const CheckResult r = check_axiom_ii(w1, 1, 1, quick());
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.mode, CheckMode::kSymbolic);
  EXPECT_EQ(r.name, "axioms.w1.ii.11");
  const CrystalModel v1 = v1_model();
  EXPECT_TRUE(check_axiom_ii(v1, 1, 0, quick()).passed());
  EXPECT_TRUE(check_axiom_ii(v1, 2, 0, quick()).passed());
}

TEST(Axioms, EpsilonLaw) {
  const CrystalModel w1 = chart_w1_model();
  EXPECT_TRUE(check_axiom_iv(w1, 1, quick()).passed());
  EXPECT_TRUE(check_axiom_iv(w1, 2, quick()).passed());
  const CheckResult r = check_axiom_iv(v1_model(), 0, quick(20));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.mode, CheckMode::kRandomized);
}

TEST(Axioms, VermaRelations) {
  const CrystalModel v1 = v1_model();
  EXPECT_TRUE(check_verma(v1, 0, 2, quick(100)).passed());
  EXPECT_TRUE(check_verma(v1, 0, 1, quick(20)).passed());
  EXPECT_TRUE(check_verma(chart_w1_model(), 1, 2, quick(40)).passed());
  EXPECT_EQ(verma_relation(1, 2).lhs.size(), 6u);
  EXPECT_EQ(verma_relation(2, 1).lhs.front().node, 1);
}

TEST(Axioms, UnsupportedPattern) {
  const CartanMatrix a({{2, -4}, {-1, 2}});
  try {
    (void)verma_relation(0, 1, a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedCartanPattern);
  }
}

// The checker must notice a broken action: e_1 scaling by c^2 violates (iv).
TEST(Axioms, BrokenModelFails) {
  CrystalModel m = chart_w1_model();
  m.name = "broken";
  const auto good = m.numeric.e;
  m.numeric.e = [good](const std::vector<Rational>& x, int i, const Rational& c) { return good(x, i, c * c); };
  const auto good_sym = m.symbolic.e;
  m.symbolic.e = [good_sym](const std::vector<RationalFunction>& x, int i, const RationalFunction& c) {
    return good_sym(x, i, c * c);
  };
  const CheckResult sym = check_axiom_iv(m, 1, quick());
  EXPECT_EQ(sym.status, CheckStatus::kFail);
  EXPECT_TRUE(sym.witness.has_value());
  const CheckResult rnd = check_axiom_iv(m, 1, {ModePreference::kRandomized, 10, 5});
  EXPECT_EQ(rnd.status, CheckStatus::kFail);
  EXPECT_TRUE(rnd.witness.has_value());
}

TEST(Axioms, ControlWords) {
  for (const char* chart : {"word0", "word02", "word010", "word12"}) {
    const VerificationReport r = run_axioms(chart, quick());
    EXPECT_TRUE(r.all_passed()) << chart << "\n" << r.to_text();
  }
  EXPECT_THROW((void)run_axioms("nope", quick()), Error);
}

// Random words: additivity and unit hold numerically.
TEST(TorusChartProperty, AdditivityOnRandomWords) {
  SampleRng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> letters;
    const auto len = rng.uniform(1, 6);
    for (std::int64_t k = 0; k < len; ++k) letters.push_back(static_cast<int>(rng.uniform(0, 2)));
    TorusWordT<Rational> p{make_word(letters), {}};
    for (std::int64_t k = 0; k < len; ++k) p.coords.emplace_back(rng.uniform(1, 1000), rng.uniform(1, 20));
    const int i = static_cast<int>(rng.uniform(0, 2));
    const Rational c(rng.uniform(1, 100), rng.uniform(1, 100)), d(rng.uniform(1, 100), rng.uniform(1, 100));
    EXPECT_EQ(e_action(e_action(p, i, d), i, c).coords, e_action(p, i, c * d).coords);
    EXPECT_EQ(epsilon(e_action(p, i, c), i), p.word.contains(i) ? epsilon(p, i) / c : Rational(0));
  }
}
