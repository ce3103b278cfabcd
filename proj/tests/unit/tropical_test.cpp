#include <gtest/gtest.h>

#include <random>

#include "geocrystal/crystal.hpp"
#include "geocrystal/errors.hpp"
#include "test_util.hpp"

using namespace geocrystal;

namespace {

Cocharacter point(std::initializer_list<std::int64_t> xs) {
  Cocharacter xi;
  int k = 0;
  for (auto v : xs) xi[vars::x(k++)] = v;
  return xi;
}

// Random positive polynomial in x0..x2 as text.
std::string random_positive(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(1, 4), coef(1, 5), ex(0, 3);
  std::string s;
  const int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    if (t) s += " + ";
    s += std::to_string(coef(rng));
    for (int k = 0; k < 3; ++k) s += "*x" + std::to_string(k) + "^" + std::to_string(ex(rng));
  }
  return s;
}

Cocharacter random_xi(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(-20, 20);
  Cocharacter xi;
  for (int k = 0; k < 3; ++k) xi[vars::x(k)] = d(rng);
  return xi;
}

template <class F>
void expect_error(ErrorCode code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Positivity, Certificates) {
  EXPECT_TRUE(check_positive(rf("x0 + 2*x1")).verified());
  EXPECT_TRUE(check_positive(rf("(x0 + x1)/(x2*x3)")).verified());
  EXPECT_FALSE(check_positive(rf("x0 - x1")).verified());
  EXPECT_FALSE(check_positive(rf("x0 - x1")).reason.empty());
}

TEST(Valuation, Univariate) {
  EXPECT_EQ(valuation(rf("(c^2 + c)/(c + 1)")), 1);
  EXPECT_EQ(valuation(rf("5")), 0);
  EXPECT_EQ(valuation(rf("1/c")), -1);
  EXPECT_EQ(valuation(rf("(c^3 + 1)/(c + 7)")), 2);
  expect_error(ErrorCode::kZeroFunction, [] { (void)valuation(rf("0")); });
  expect_error(ErrorCode::kConfigError, [] { (void)valuation(rf("x0 + x1")); });
}

TEST(Tropicalize, Examples) {
  EXPECT_EQ(tropicalize(rf("x0*x1^2")).to_string(), "xi_0 + 2*xi_1");
  const PLExpression e = tropicalize(rf("(x0 + x1)/x2"));
  EXPECT_EQ(e.evaluate(point({3, 5, 1})), 4);
  EXPECT_EQ(e.evaluate(point({7, -5, 1})), 6);
  EXPECT_EQ(tropicalize(FormulaTable::embedded().get("gamma0")).to_string(), "2*xi_0 - xi_1 - xi_3 - xi_5");
  EXPECT_EQ(tropicalize(rf("3")).to_string(), "0");
}

TEST(Tropicalize, RejectsUncertified) {
  expect_error(ErrorCode::kNotCertifiedPositive, [] { (void)tropicalize(rf("x0 - x1")); });
  expect_error(ErrorCode::kNotCertifiedPositive, [] { (void)tropicalize_expression("x0 - x1"); });
  expect_error(ErrorCode::kNotCertifiedPositive, [] { (void)tropicalize_expression("-x0"); });
  expect_error(ErrorCode::kNotCertifiedPositive, [] { (void)tropicalize_expression("0*x0 + x1"); });
}

TEST(Tropicalize, ExpressionMatchesExpanded) {
  const std::string text = "(x0 + x1)^2/(x2 + 3*x0*x1)";
  const PLExpression a = tropicalize_expression(text);
  const PLExpression b = tropicalize(rf(text));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const Cocharacter xi = random_xi(rng);
    EXPECT_EQ(a.evaluate(xi), b.evaluate(xi));
    EXPECT_EQ(a.evaluate(xi), valuation_along(rf(text), xi));
  }
}

TEST(Tropicalize, SharedNamesAreSharedNodes) {
  const PLExpression u = tropicalize_expression("x0 + x1");
  const std::map<std::string, PLExpression, std::less<>> b = {{"u", u}};
  const PLExpression e = tropicalize_expression("u^2*x2 + u", &b);
  const PLExpression expanded = tropicalize_expression("(x0 + x1)^2*x2 + x0 + x1");
  EXPECT_LT(e.node_count(), expanded.node_count() + 2);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const Cocharacter xi = random_xi(rng);
    EXPECT_EQ(e.evaluate(xi), expanded.evaluate(xi));
  }
}

TEST(Tropicalize, PrintingGrammar) {
  const PLExpression x0 = PLExpression::variable(vars::x(0));
  const PLExpression x1 = PLExpression::variable(vars::x(1));
  EXPECT_EQ(max(x0, x1).to_string(), "max(xi_0, xi_1)");
  EXPECT_EQ(max(x0, x0).to_string(), "xi_0");
  EXPECT_EQ((x0 - x1).to_string(), "xi_0 - xi_1");
  EXPECT_EQ((-x0).to_string(), "-xi_0");
  EXPECT_EQ(PLExpression::variable(vars::c()).to_string(), "xi_c");
  EXPECT_EQ(pl_variable_name(vars::x(3)), "xi_3");
  const PLExpression m = max(x0, x1);
  EXPECT_EQ((x0 - m).to_string(), "xi_0 - max(xi_0, xi_1)");
  EXPECT_EQ(m.scaled(2).evaluate(point({1, 4})), 8);
}

TEST(TropicalizeProperty, Homomorphism) {
  std::mt19937_64 rng(20240917);
  for (int trial = 0; trial < 60; ++trial) {
    const RationalFunction f = rf(random_positive(rng));
    const RationalFunction g = rf(random_positive(rng));
    const PLExpression tf = tropicalize(f), tg = tropicalize(g);
    const PLExpression prod = tropicalize(f * g), quot = tropicalize(f / g), sum = tropicalize(f + g);
    for (int s = 0; s < 5; ++s) {
      const Cocharacter xi = random_xi(rng);
      EXPECT_EQ(prod.evaluate(xi), tf.evaluate(xi) + tg.evaluate(xi));
      EXPECT_EQ(quot.evaluate(xi), tf.evaluate(xi) - tg.evaluate(xi));
      EXPECT_EQ(sum.evaluate(xi), std::max(tf.evaluate(xi), tg.evaluate(xi)));
      Cocharacter scaled = xi;
      for (auto& [v, n] : scaled) n *= 3;
      EXPECT_EQ(tf.evaluate(scaled), 3 * tf.evaluate(xi));
      EXPECT_EQ(tf.evaluate(xi), valuation_along(f, xi));
    }
  }
}

TEST(PLProgram, MatchesEvaluate) {
  const TropicalCrystal& tc = TropicalCrystal::embedded();
  const auto inputs = crystal_inputs();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> d(-50, 50);
  for (int i = 0; i < 3; ++i) {
    const PLProgram prog(tc.action(i), inputs);
    EXPECT_EQ(prog.input_count(), 7u);
    EXPECT_EQ(prog.output_count(), 6u);
    for (int t = 0; t < 100; ++t) {
      std::vector<std::int64_t> in(7);
      for (auto& v : in) v = d(rng);
      Cocharacter xi;
      for (std::size_t k = 0; k < 7; ++k) xi[inputs[k]] = in[k];
      const auto out = prog(in);
      for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(out[k], tc.action(i)[k].evaluate(xi));
    }
  }
}

TEST(TropicalCrystal, GoldenValues) {
  const TropicalCrystal& tc = TropicalCrystal::embedded();
  const LatticePoint zero{};
  EXPECT_EQ(tc.e(1, 1, zero), (LatticePoint{0, 1, 0, 0, 0, 0}));
  const LatticePoint xi{3, -1, 4, 1, -5, 9};
  for (int i = 0; i < 3; ++i) EXPECT_EQ(tc.e(i, 0, xi), xi);
  EXPECT_EQ(tc.structure(zero)[0], 0);
  EXPECT_EQ(tc.wt(0).to_string(), "2*xi_0 - xi_1 - xi_3 - xi_5");
}

TEST(TropicalCrystal, E0PreservesOtherWeights) {
  const TropicalCrystal& tc = TropicalCrystal::embedded();
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> d(-30, 30), s(-6, 6);
  for (int t = 0; t < 200; ++t) {
    LatticePoint xi;
    for (auto& v : xi) v = d(rng);
    const std::int64_t n = s(rng);
    const auto before = tc.structure(xi);
    const auto after = tc.structure(tc.e(0, n, xi));
    EXPECT_EQ(after[0], before[0] + 2 * n);
    EXPECT_EQ(after[1], before[1] - n);
    EXPECT_EQ(after[2], before[2]);
    EXPECT_EQ(after[3], before[3] - n);
  }
}

TEST(TropicalCrystal, InvalidNode) {
  expect_error(ErrorCode::kUnknownIndex, [] { (void)TropicalCrystal::embedded().wt(3); });
}

TEST(TropicalCrystal, OracleAgreement) {
  const VerificationReport r = check_oracle_agreement(TropicalCrystal::embedded(), 30, 1);
  EXPECT_TRUE(r.all_passed()) << r.to_text();
}

TEST(TropicalCrystal, PositivitySuite) {
  const VerificationReport r = check_positivity(FormulaTable::embedded());
  EXPECT_EQ(r.checks.size(), 9u);
  EXPECT_TRUE(r.all_passed()) << r.to_text();
}

TEST(TropicalCrystal, SmallSweep) {
  CrystalSweepConfig cfg;
  cfg.box_radius = 1;
  cfg.step_radius = 1;
  cfg.samples = 300;
  const VerificationReport r = check_crystal_axioms(TropicalCrystal::embedded(), cfg);
  EXPECT_EQ(r.checks.size(), 12u);
  EXPECT_TRUE(r.all_passed()) << r.to_text();
}
