#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "geocrystal/formula_table.hpp"
#include "geocrystal/report.hpp"
#include "geocrystal/tropical.hpp"

namespace geocrystal {

/// A cocharacter of the chart torus, coordinates dual to x0..x5.
using LatticePoint = std::array<std::int64_t, 6>;

/// Piecewise-linear crystal on Z^6 obtained by tropicalizing the node actions,
/// gamma_i and epsilon_i of the V1 chart. The c slot of every action becomes
/// the integer step n, so e(i, n, .) is the tropical e_i^n.
class TropicalCrystal {
 public:
  using Workspace = std::vector<std::int64_t>;

  explicit TropicalCrystal(const FormulaTable& table);
  static const TropicalCrystal& embedded();

  /// Six components over (xi_c, xi_0..xi_5).
  const std::vector<PLExpression>& action(int i) const;
  const PLExpression& wt(int i) const;
  const PLExpression& eps(int i) const;

  /// The rational functions these were tropicalized from, for oracles.
  const std::vector<RationalFunction>& action_source(int i) const;
  const RationalFunction& wt_source(int i) const;
  const RationalFunction& eps_source(int i) const;

  LatticePoint e(int i, std::int64_t step, const LatticePoint& xi, Workspace& ws) const;
  LatticePoint e(int i, std::int64_t step, const LatticePoint& xi) const;
  /// (wt_0, wt_1, wt_2, eps_0, eps_1, eps_2).
  std::array<std::int64_t, 6> structure(const LatticePoint& xi, Workspace& ws) const;
  std::array<std::int64_t, 6> structure(const LatticePoint& xi) const;

  std::size_t instruction_count(int i) const { return action_programs_[node(i)].instruction_count(); }

 private:
  static std::size_t node(int i);

  std::array<std::vector<PLExpression>, 3> actions_;
  std::array<PLExpression, 3> wt_, eps_;
  std::array<std::vector<RationalFunction>, 3> action_sources_;
  std::array<RationalFunction, 3> wt_sources_, eps_sources_;
  std::vector<PLProgram> action_programs_;
  std::vector<PLProgram> structure_program_;
};

/// Inputs of the action programs: c, then x0..x5.
std::vector<VarId> crystal_inputs();
Cocharacter to_cocharacter(const LatticePoint& xi, std::int64_t step = 0);

struct CrystalSweepConfig {
  std::int64_t box_radius = 5;      // box [-R, R]^6, exhaustive
  std::int64_t step_radius = 2;     // steps -S..S
  std::size_t samples = 10000;      // extra random points
  std::int64_t sample_radius = 1000;
  std::int64_t sample_step_radius = 10;
  std::uint64_t seed = 20240917;
};

/// Tropical images of the geometric-crystal axioms:
///   eps_i(e_i^n x) = eps_i(x) - n,  wt_j(e_i^n x) = wt_j(x) + n a_ij,
///   e_i^m e_i^n = e_i^{m+n},  and the Verma relations with c1 -> m, c2 -> n.
/// Exhaustive over the box, then on random points and steps.
VerificationReport check_crystal_axioms(const TropicalCrystal& crystal, const CrystalSweepConfig& cfg);

/// PLExpression values against valuation_along for every action component,
/// wt_i and eps_i, on `samples` random (xi, step).
VerificationReport check_oracle_agreement(const TropicalCrystal& crystal, std::size_t samples, std::uint64_t seed);

/// Positivity certificates for sigma, its inverse, every node action on V1,
/// gamma_i and epsilon_i.
VerificationReport check_positivity(const FormulaTable& table);

}  // namespace geocrystal
