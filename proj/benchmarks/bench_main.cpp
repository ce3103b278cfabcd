#include <benchmark/benchmark.h>

#include <random>

#include "geocrystal/birational.hpp"
#include "geocrystal/crystal.hpp"
#include "geocrystal/parser.hpp"
#include "geocrystal/suites.hpp"

using namespace geocrystal;

namespace {

std::vector<Rational> point() {
  return {Rational(2), Rational(3, 7), Rational(5), Rational(11, 2), Rational(13), Rational(17, 3)};
}

void BM_ParseFormula(benchmark::State& state) {
  const std::string text = dump_formula("sigma1");
  for (auto _ : state) benchmark::DoNotOptimize(parse_rf(text));
}
BENCHMARK(BM_ParseFormula);

void BM_RationalFunctionMultiply(benchmark::State& state) {
  const auto& t = FormulaTable::embedded();
  const RationalFunction f = t.get("sigma1"), g = t.get("sigma3");
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_RationalFunctionMultiply);

void BM_SigmaSymbolic(benchmark::State& state) {
  const std::vector<RationalFunction> x = symbolic_x();
  for (auto _ : state) benchmark::DoNotOptimize(sigma_bar(x));
}
BENCHMARK(BM_SigmaSymbolic)->Unit(benchmark::kMillisecond);

void BM_SigmaOnRationals(benchmark::State& state) {
  const auto x = point();
  for (auto _ : state) benchmark::DoNotOptimize(sigma_bar(x));
}
BENCHMARK(BM_SigmaOnRationals);

void BM_InducedE0OnRationals(benchmark::State& state) {
  const auto x = point();
  const Rational c(7, 3);
  for (auto _ : state) benchmark::DoNotOptimize(induced_e0(x, c));
}
BENCHMARK(BM_InducedE0OnRationals);

void BM_ChartE1OnRationals(benchmark::State& state) {
  const auto x = point();
  const Rational c(7, 3);
  for (auto _ : state) benchmark::DoNotOptimize(chart1_e(x, 1, c));
}
BENCHMARK(BM_ChartE1OnRationals);

void BM_TropicalAction(benchmark::State& state) {
  const TropicalCrystal& tc = TropicalCrystal::embedded();
  const int node = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> d(-100, 100);
  std::vector<LatticePoint> pts(256);
  for (auto& p : pts)
    for (auto& v : p) v = d(rng);
  TropicalCrystal::Workspace ws;
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(tc.e(node, 2, pts[k++ & 255], ws));
}
BENCHMARK(BM_TropicalAction)->DenseRange(0, 2);

void BM_TropicalizeSigma(benchmark::State& state) {
  const RationalFunction f = FormulaTable::embedded().get("sigma1");
  for (auto _ : state) benchmark::DoNotOptimize(tropicalize(f));
}
BENCHMARK(BM_TropicalizeSigma);

}  // namespace
BENCHMARK_MAIN();
