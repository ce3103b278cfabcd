#include <gtest/gtest.h>

#include "geocrystal/birational.hpp"
#include "geocrystal/fundrep.hpp"
#include "test_util.hpp"

using namespace geocrystal;

namespace {

using Vec = ModuleVectorT<Rational>;

Vec vec(std::initializer_list<std::pair<BasisLabel, Rational>> entries) {
  Vec v = zero_vector<Rational>();
  for (const auto& [b, c] : entries) v[index_of(b)] = c;
  return v;
}

}  // namespace

TEST(Module, ActionTables) {
  using B = BasisLabel;
  EXPECT_EQ(chevalley_action(Chevalley::kF, 1, basis_vector<Rational>(B::kV1)), vec({{B::kV2, 1}}));
  EXPECT_EQ(chevalley_action(Chevalley::kE, 0, basis_vector<Rational>(B::kV1)),
            vec({{B::kEmpty, 1}, {B::kV0, Rational(1, 2)}}));
  EXPECT_EQ(chevalley_action(Chevalley::kF, 2, basis_vector<Rational>(B::kV1)), zero_vector<Rational>());
  EXPECT_EQ(chevalley_action(Chevalley::kF, 1, basis_vector<Rational>(B::kV0)), vec({{B::kV3bar, 2}}));
}

TEST(Module, Weights) {
  EXPECT_EQ(weight_of(BasisLabel::kV1).to_string(), "-2*L0 + L1");
  EXPECT_EQ(weight_of(BasisLabel::kV1bar).to_string(), "2*L0 - L1");
  EXPECT_EQ(weight_of(BasisLabel::kEmpty), zero_weight());
  EXPECT_EQ(parse_label("v2bar"), BasisLabel::kV2bar);
  EXPECT_FALSE(parse_label("v9").has_value());
}

TEST(Module, TorusAction) {
  using B = BasisLabel;
  const Rational c(7);
  EXPECT_EQ(torus_action(2, c, basis_vector<Rational>(B::kV2)), vec({{B::kV2, 7}}));
  EXPECT_EQ(torus_action(0, c, basis_vector<Rational>(B::kV0)), vec({{B::kV0, 1}}));
  EXPECT_EQ(torus_action(1, c, basis_vector<Rational>(B::kV1)), vec({{B::kV1, 7}}));
}

TEST(Module, YOperators) {
  using B = BasisLabel;
  EXPECT_EQ(apply_Y(2, Rational(5), basis_vector<Rational>(B::kV2)), vec({{B::kV2, 5}, {B::kV3, 1}}));
  EXPECT_EQ(apply_Y(1, Rational(1), basis_vector<Rational>(B::kV1)), vec({{B::kV1, 1}, {B::kV2, 1}}));
  try {
    (void)apply_Y(0, Rational(0), basis_vector<Rational>(B::kV1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroCoordinate);
  }
}

TEST(Module, ChartCoefficients) {
  using B = BasisLabel;
  const auto v1 = build_V1(symbolic_x());
  EXPECT_EQ(v1[index_of(B::kV1bar)], rf("x0^2"));
  EXPECT_EQ(v1[index_of(B::kEmpty)], rf("x0"));
  EXPECT_EQ(v1[index_of(B::kV2bar)], rf("x0*x1"));
  const auto v2 = build_V2(symbolic_y());
  EXPECT_EQ(v2[index_of(B::kV1)], rf("y1*y3"));
  EXPECT_EQ(v2[index_of(B::kEmpty)], rf("y0"));
  EXPECT_TRUE(equal_symbolic(v2[index_of(B::kV2)], rf("y2*(y3 + y4/y1)")));
}

TEST(Module, SelfConsistency) {
  const auto checks = module_self_consistency();
  EXPECT_EQ(checks.size(), 22u);
  for (const auto& c : checks) EXPECT_TRUE(c.passed()) << c.name << ": " << c.detail;
}

TEST(Module, TranscribedCoefficients) {
  const auto checks = verify_transcribed_coefficients();
  EXPECT_EQ(checks.size(), 16u);
  for (const auto& c : checks) EXPECT_TRUE(c.passed()) << c.name;
}

// Numeric and symbolic Y-products agree at random points.
TEST(ModuleProperty, SymbolicMatchesNumeric) {
  SampleRng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> x;
    EvalPoint p;
    for (int k = 0; k < 6; ++k) {
      x.emplace_back(rng.uniform(1, 1000), rng.uniform(1, 50));
      p.set(vars::x(k), x.back());
    }
    const auto numeric = build_V1(x);
    const auto symbolic = build_V1(symbolic_x());
    for (std::size_t r = 0; r < kModuleDim; ++r) EXPECT_EQ(symbolic[r].evaluate(p), numeric[r]);
  }
}
