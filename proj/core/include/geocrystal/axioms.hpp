#pragma once

#include <functional>
#include <string>
#include <vector>

#include "geocrystal/cartan.hpp"
#include "geocrystal/identity.hpp"
#include "geocrystal/rational_function.hpp"
#include "geocrystal/report.hpp"

namespace geocrystal {

/// e_i^c, gamma_i and epsilon_i on points given as coordinate vectors.
template <class F>
struct CrystalOps {
  std::function<std::vector<F>(const std::vector<F>& x, int i, const F& c)> e;
  std::function<F(const std::vector<F>& x, int i)> gamma;
  std::function<F(const std::vector<F>& x, int i)> epsilon;
};

/// A geometric crystal on a torus with named coordinates, runnable both on
/// numbers and on symbolic coordinates.
struct CrystalModel {
  std::string name;
  std::vector<int> nodes;
  std::vector<VarId> coordinates;
  CrystalOps<Rational> numeric;
  CrystalOps<RationalFunction> symbolic;
  /// Nodes whose e_i is cheap enough for symbolic checks.
  std::vector<int> symbolic_nodes;
  /// Nodes whose gamma_i and epsilon_i are available symbolically.
  std::vector<int> symbolic_structure_nodes;
  /// Whether Verma relations run symbolically (unless randomized is forced).
  bool verma_symbolic_by_default = false;
};

/// Longest word on which Verma relations are composed symbolically.
inline constexpr std::size_t kSymbolicVermaMaxLength = 3;

/// B_i^- for `word` with one coordinate variable per letter. Verma checks are
/// symbolic when the word has at most two distinct letters and length at most
/// kSymbolicVermaMaxLength, randomized otherwise.
CrystalModel torus_chart_model(std::string name, const ReducedWord& word, std::vector<VarId> coordinates,
                               std::vector<int> nodes);
/// First chart with the word (0,1,2,1,2,1) and coordinates x0..x5.
CrystalModel chart_w1_model(std::vector<int> nodes = {1, 2});
/// Second chart with the word (2,1,2,1,0,1) and coordinates along it
/// (y2, y1, y4, y3, y0, y5).
CrystalModel chart_w2_model(std::vector<int> nodes = {0, 1});
/// The first chart with all three nodes; node 0 acts through the second
/// chart: e0 = sigma^{-1} e0 sigma, gamma0 and epsilon0 pulled back.
CrystalModel v1_model();

/// One c-parameter entry of a Verma relation: node and exponents (p, q) of
/// c1^p c2^q.
struct VermaFactor {
  int node;
  int p;
  int q;
};

struct VermaRelation {
  std::vector<VermaFactor> lhs;  // written left to right, applied right to left
  std::vector<VermaFactor> rhs;
};

/// The relation selected by (a_ij, a_ji); UnsupportedCartanPattern otherwise.
VermaRelation verma_relation(int i, int j, const CartanMatrix& a = d43_cartan());

/// gamma_j(e_i^c x) = c^{a_ij} gamma_j(x).
CheckResult check_axiom_ii(const CrystalModel& m, int i, int j, const CheckConfig& cfg);
/// epsilon_i(e_i^c x) = c^{-1} epsilon_i(x).
CheckResult check_axiom_iv(const CrystalModel& m, int i, const CheckConfig& cfg);
CheckResult check_verma(const CrystalModel& m, int i, int j, const CheckConfig& cfg);
/// e_i^c e_i^d = e_i^{cd}.
CheckResult check_additivity(const CrystalModel& m, int i, const CheckConfig& cfg);
/// e_i^1 = id.
CheckResult check_unit(const CrystalModel& m, int i, const CheckConfig& cfg);

/// Every check above for the model's nodes: (ii) for all ordered pairs, (iv),
/// additivity and unit for each node, Verma for each unordered pair.
std::vector<CheckResult> check_all_axioms(const CrystalModel& m, const CheckConfig& cfg);

}  // namespace geocrystal
