#include <gtest/gtest.h>

#include <random>

#include "geocrystal/errors.hpp"
#include "geocrystal/formula_table.hpp"
#include "geocrystal/identity.hpp"
#include "test_util.hpp"

using namespace geocrystal;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int vars, int degree, int terms) {
  std::vector<Term> out;
  std::uniform_int_distribution<int> coeff(-5, 5), exp(0, degree), var(0, vars - 1);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int left = degree;
    for (int k = 0; k < 2 && left > 0; ++k) {
      const int e = std::min(left, exp(rng));
      left -= e;
      if (e) m = m * Monomial::variable(vars::x(var(rng)), static_cast<std::uint32_t>(e));
    }
    out.push_back({m, Rational(coeff(rng))});
  }
  return Polynomial::from_terms(std::move(out));
}

RationalFunction random_rf(std::mt19937_64& rng) {
  Polynomial den;
  while (den.is_zero()) den = random_poly(rng, 4, 3, 3);
  return RationalFunction(random_poly(rng, 4, 3, 3), den);
}

}  // namespace

TEST(Polynomial, AdditionCancels) {
  EXPECT_EQ(rf("(x0 + x1) + (x0 - x1)"), rf("2*x0"));
  const Polynomial p = rf("x0^2 + 2*x0*x1").num();
  EXPECT_EQ(p + Polynomial(), p);
  EXPECT_EQ(p + rf("x1^2").num(), rf("x0^2 + 2*x0*x1 + x1^2").num());
}

TEST(Polynomial, Multiplication) {
  EXPECT_EQ(rf("(x0+x1)*(x0-x1)").num(), rf("x0^2 - x1^2").num());
  const Polynomial p = rf("x0 + 3*x2").num();
  EXPECT_EQ(p * Polynomial(Rational(1)), p);
  const Polynomial cube = rf("x1 + x3").num().pow(3);
  ASSERT_EQ(cube.size(), 4u);
  std::vector<std::int64_t> coeffs;
  for (const Term& t : cube.terms()) coeffs.push_back(t.coefficient.numerator().get_si());
  EXPECT_EQ(coeffs, (std::vector<std::int64_t>{1, 3, 3, 1}));
}

TEST(Polynomial, PrintsRationalCoefficients) {
  EXPECT_EQ(rf("x0^2/2 + x3").to_string(), "x0^2/2 + x3");
  EXPECT_EQ(rf("x0^2/2 + x3").num().leading().coefficient, Rational(1, 2));
}

TEST(RationalFunction, FieldArithmetic) {
  EXPECT_EQ(rf("(x0/x1) * (x1/x0)"), RationalFunction(1));
  EXPECT_TRUE(equal_symbolic(rf("x0/x1 + x2/x3"), rf("(x0*x3 + x1*x2)/(x1*x3)")));
  EXPECT_EQ(rf("x0/x1 + x2/x3").to_string(), "(x0*x3 + x1*x2)/(x1*x3)");
  try {
    (void)(rf("x0") / RationalFunction());
    FAIL() << "expected DivisionByZeroFunction";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByZeroFunction);
  }
}

TEST(RationalFunction, EvaluateAtOnes) {
  const FormulaTable& t = FormulaTable::embedded();
  EXPECT_EQ(t.get("a").evaluate(all_ones()), Rational(9));
  EXPECT_EQ(t.get("X1").evaluate(all_ones()), Rational(6));
  EXPECT_EQ(t.get("gamma1").evaluate(all_ones()), Rational(1));
}

TEST(RationalFunction, EvaluateErrors) {
  EvalPoint p;
  p.set(vars::x(0), Rational(2));
  try {
    (void)rf("x0 + x1").evaluate(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnassignedVariable);
  }
  p.set(vars::x(1), Rational(2));
  try {
    (void)rf("1/(x0 - x1)").evaluate(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEvalDenominatorZero);
  }
}

TEST(RationalFunction, SymbolicEquality) {
  EXPECT_TRUE(equal_symbolic(rf("x0/x1"), rf("(x0*x2)/(x1*x2)")));
  EXPECT_FALSE(equal_symbolic(rf("x0/x1"), rf("x1/x0")));
  EXPECT_TRUE(equal_symbolic(rf("(x0^2 - x1^2)/(x0 - x1)"), rf("(x0 + x1)/1")));
}

TEST(RationalFunction, RandomizedEquality) {
  const RationalFunction f = rf("(x0 + x1)^2/(x2 + 3)");
  const auto same = rf_equal_randomized(f, f, 10, 7);
  EXPECT_TRUE(same.equal);
  EXPECT_EQ(same.trials, 10u);
  const auto differ = rf_equal_randomized(rf("x0"), rf("x0 + 1"), 1, 7);
  EXPECT_FALSE(differ.equal);
  ASSERT_TRUE(differ.witness.has_value());
}

TEST(RationalFunction, DegenerateDomain) {
  // Every point rejected.
  const SampleSpace space = SampleSpace::for_variables({vars::x(0)});
  try {
    (void)check_at_random_points(
        [](const EvalPoint&) -> bool { throw Error(ErrorCode::kEvalDenominatorZero, "always"); }, space, 5, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateDomain);
  }
}

TEST(Parser, RoundTrip) {
  for (const char* text : {"(x0+x1)/(x0-x1)", "x0^2/2 + x3", "-x0^-2*x1", "3/(2*x0*x1)", "(x0 - 1)/(x1^2 + x2/5)"}) {
    const RationalFunction f = rf(text);
    EXPECT_EQ(rf(f.to_string()), f) << text;
    EXPECT_EQ(rf(f.to_string()).to_string(), f.to_string()) << text;
  }
}

TEST(Parser, ErrorsCarryPosition) {
  try {
    (void)rf("x0++x1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 4u);
    EXPECT_FALSE(e.expected().empty());
  }
  try {
    (void)rf("x0 + nosuchname");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownVariable);
  }
  try {
    (void)rf("x0^12345678901");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kExponentOverflow);
  }
}

TEST(FormulaTable, ChecksumsAreEnforced) {
  EXPECT_NO_THROW(FormulaTable::parse(FormulaTable::with_checksums("q := x0 + 1\n")));
  try {
    (void)FormulaTable::parse("q := x0 + 1  # fnv1a64=0000000000000000\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kChecksumMismatch);
  }
  try {
    (void)FormulaTable::embedded().get("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownFormula);
  }
}

TEST(FormulaTable, NamedPolynomialsArePositive) {
  for (const auto& name : named_polynomial_names()) {
    EXPECT_TRUE(FormulaTable::embedded().polynomial(name).all_coefficients_positive()) << name;
  }
}

// Field axioms on random small instances (4 variables, degree <= 3).
TEST(RationalFunctionProperty, FieldAxioms) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const RationalFunction a = random_rf(rng), b = random_rf(rng), c = random_rf(rng);
    EXPECT_TRUE(equal_symbolic((a + b) + c, a + (b + c)));
    EXPECT_TRUE(equal_symbolic((a * b) * c, a * (b * c)));
    EXPECT_TRUE(equal_symbolic(a * (b + c), a * b + a * c));
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), RationalFunction(1));
    EXPECT_EQ(rf(a.to_string()), a);
  }
}

// Evaluation is a ring homomorphism wherever it is defined.
TEST(RationalFunctionProperty, EvaluationHomomorphism) {
  std::mt19937_64 rng(12);
  SampleRng points(13);
  const SampleSpace space = SampleSpace::for_variables({vars::x(0), vars::x(1), vars::x(2), vars::x(3)});
  for (int trial = 0; trial < 40; ++trial) {
    const RationalFunction f = random_rf(rng), g = random_rf(rng);
    const EvalPoint p = space.sample(points);
    try {
      const Rational fv = f.evaluate(p), gv = g.evaluate(p);
      EXPECT_EQ((f + g).evaluate(p), fv + gv);
      EXPECT_EQ((f * g).evaluate(p), fv * gv);
      EXPECT_EQ((f - g).evaluate(p), fv - gv);
    } catch (const Error& e) {
      EXPECT_TRUE(is_domain_failure(e));
    }
  }
}

// A symbolically equal pair is never reported unequal.
TEST(RationalFunctionProperty, RandomizedSoundness) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 15; ++trial) {
    const RationalFunction a = random_rf(rng), b = random_rf(rng);
    if (a.is_zero()) continue;
    EXPECT_TRUE(rf_equal_randomized((a * b) / a, b, 20, 100 + trial).equal);
  }
}

TEST(Substitution, AgreesWithEvaluation) {
  std::mt19937_64 rng(15);
  SampleRng points(16);
  const SampleSpace space = SampleSpace::for_variables({vars::x(0), vars::x(1), vars::x(2), vars::x(3)});
  for (int trial = 0; trial < 20; ++trial) {
    const RationalFunction f = random_rf(rng);
    Substitution images{{vars::x(0), random_rf(rng)}, {vars::x(1), rf("x2 + x3")}};
    const EvalPoint p = space.sample(points);
    try {
      EvalPoint q = p;
      q.set(vars::x(0), images.at(vars::x(0)).evaluate(p));
      q.set(vars::x(1), images.at(vars::x(1)).evaluate(p));
      const Rational direct = f.evaluate(q);
      EXPECT_EQ(substitute(f, images).evaluate(p), direct);
    } catch (const Error& e) {
      EXPECT_TRUE(is_domain_failure(e));
    }
  }
}
