#include <gtest/gtest.h>

#include "geocrystal/errors.hpp"
#include "geocrystal/suites.hpp"

using namespace geocrystal;

namespace {

RunConfig small() {
  RunConfig cfg;
  cfg.check = {ModePreference::kAuto, 20, 20240917};
  return cfg;
}

}  // namespace

TEST(Suites, Names) {
  const auto& names = suite_names();
  EXPECT_NE(std::find(names.begin(), names.end(), "all"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "tropical"), names.end());
}

TEST(Suites, ModuleSuite) {
  const VerificationReport r = run_suite("module", small());
  EXPECT_EQ(r.checks.size(), 38u);
  EXPECT_TRUE(r.all_passed()) << r.to_text();
  EXPECT_TRUE(std::is_sorted(r.checks.begin(), r.checks.end(),
                             [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; }));
}

TEST(Suites, UnknownSuite) {
  try {
    (void)run_suite("nope", small());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfigError);
  }
}

TEST(Suites, JsonIsDeterministic) {
  const std::string a = run_suite("module", small()).to_json();
  const std::string b = run_suite("module", small()).to_json();
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("\"schema_version\": 1"), std::string::npos);
  EXPECT_EQ(a.find("wall_time_ms"), std::string::npos);
  EXPECT_NE(run_suite("module", small()).to_json(true).find("wall_time_ms"), std::string::npos);
}

TEST(Suites, ControlWordAxioms) {
  const VerificationReport r = run_axioms("word010", small().check);
  EXPECT_FALSE(r.checks.empty());
  EXPECT_TRUE(r.all_passed()) << r.to_text();
}

TEST(Suites, FailuresCarryWitness) {
  VerificationReport r;
  r.append(timed_check("demo.failing", CheckMode::kSymbolic, [](CheckResult& c) {
    c.status = CheckStatus::kFail;
    c.witness = "x0 = 1";
  }));
  EXPECT_FALSE(r.all_passed());
  EXPECT_EQ(r.failures(), 1u);
  EXPECT_NE(r.to_json().find("x0 = 1"), std::string::npos);
}

TEST(Dump, Formulas) {
  EXPECT_EQ(dump_formula("gamma0"), "x0^2/(x1*x3*x5)");
  try {
    (void)dump_formula("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownFormula);
  }
}

TEST(Dump, Module) {
  const std::string m = dump_module();
  EXPECT_NE(m.find("wt(v1) = -2*L0 + L1"), std::string::npos);
  EXPECT_NE(m.find("e0(v1) = 1/2*v0"), std::string::npos);
}
