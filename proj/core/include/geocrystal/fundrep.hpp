#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "geocrystal/cartan.hpp"
#include "geocrystal/errors.hpp"
#include "geocrystal/rational_function.hpp"
#include "geocrystal/report.hpp"

namespace geocrystal {

/// Basis of the 8-dimensional module W(varpi_1), in its fixed order.
enum class BasisLabel : int { kV1, kV2, kV3, kV0, kEmpty, kV3bar, kV2bar, kV1bar };
inline constexpr int kModuleDim = 8;
inline constexpr std::array<BasisLabel, kModuleDim> kBasis = {
    BasisLabel::kV1,   BasisLabel::kV2,    BasisLabel::kV3,    BasisLabel::kV0,
    BasisLabel::kEmpty, BasisLabel::kV3bar, BasisLabel::kV2bar, BasisLabel::kV1bar};

inline constexpr std::size_t index_of(BasisLabel b) { return static_cast<std::size_t>(b); }
/// "v1", "v2", "v3", "v0", "empty", "v3bar", "v2bar", "v1bar".
std::string_view label_name(BasisLabel b);
std::optional<BasisLabel> parse_label(std::string_view name);

ClassicalWeight weight_of(BasisLabel b);

enum class Chevalley { kE, kF };

struct Transition {
  BasisLabel from;
  BasisLabel to;
  Rational coefficient;
};

/// The nonzero entries of e_i or f_i; unlisted basis vectors map to zero.
const std::vector<Transition>& action_table(Chevalley which, int i);

template <class F>
using ModuleVectorT = std::array<F, kModuleDim>;
using ModuleVector = ModuleVectorT<RationalFunction>;

/// Dense 8x8 matrix acting on columns: (M v)[r] = sum_c M[r][c] v[c].
template <class F>
using LinearOperatorT = std::array<std::array<F, kModuleDim>, kModuleDim>;

template <class F>
ModuleVectorT<F> zero_vector() {
  ModuleVectorT<F> v;
  v.fill(F(Rational(0)));
  return v;
}

template <class F>
ModuleVectorT<F> basis_vector(BasisLabel b) {
  ModuleVectorT<F> v = zero_vector<F>();
  v[index_of(b)] = F(Rational(1));
  return v;
}

template <class F>
ModuleVectorT<F> chevalley_action(Chevalley which, int i, const ModuleVectorT<F>& v) {
  ModuleVectorT<F> out = zero_vector<F>();
  for (const Transition& t : action_table(which, i)) {
    const F& src = v[index_of(t.from)];
    if (is_zero(src)) continue;
    out[index_of(t.to)] = out[index_of(t.to)] + src * F(t.coefficient);
  }
  return out;
}

/// alpha_i^vee(scale): the line of b scales by scale^<alpha_i^vee, wt(b)>.
template <class F>
ModuleVectorT<F> torus_action(int i, const F& scale, const ModuleVectorT<F>& v) {
  if (is_zero(scale)) throw Error(ErrorCode::kZeroCoordinate, "torus element with zero scale");
  ModuleVectorT<F> out = v;
  for (BasisLabel b : kBasis) {
    const std::int64_t k = pairing(i, weight_of(b));
    if (k != 0 && !is_zero(out[index_of(b)])) out[index_of(b)] = out[index_of(b)] * power(scale, k);
  }
  return out;
}

/// Y_i(c) v = (sum_k f_i^k / (k! c^k)) alpha_i^vee(c) v; the series stops
/// because f_i is nilpotent.
template <class F>
ModuleVectorT<F> apply_Y(int i, const F& coord, const ModuleVectorT<F>& v) {
  if (is_zero(coord)) throw Error(ErrorCode::kZeroCoordinate, "Y operator with zero coordinate");
  ModuleVectorT<F> term = torus_action(i, coord, v);
  ModuleVectorT<F> out = term;
  for (std::int64_t k = 1;; ++k) {
    term = chevalley_action(Chevalley::kF, i, term);
    bool all_zero = true;
    for (auto& x : term) {
      if (is_zero(x)) continue;
      all_zero = false;
      x = x / (coord * F(Rational(k)));
    }
    if (all_zero) return out;
    for (std::size_t r = 0; r < kModuleDim; ++r) out[r] = out[r] + term[r];
  }
}

template <class F>
LinearOperatorT<F> Y_operator(int i, const F& coord) {
  LinearOperatorT<F> m;
  for (BasisLabel b : kBasis) {
    const ModuleVectorT<F> col = apply_Y(i, coord, basis_vector<F>(b));
    for (std::size_t r = 0; r < kModuleDim; ++r) m[r][index_of(b)] = col[r];
  }
  return m;
}

/// Y_{i_1}(c_1) ... Y_{i_k}(c_k) applied to a basis vector.
template <class F>
ModuleVectorT<F> build_vector(const ReducedWord& word, const std::vector<F>& coords, BasisLabel start) {
  if (coords.size() != word.size()) throw Error(ErrorCode::kConfigError, "word and coordinate lengths differ");
  ModuleVectorT<F> v = basis_vector<F>(start);
  for (std::size_t k = word.size(); k-- > 0;) v = apply_Y(word.letters[k], coords[k], v);
  return v;
}

/// V1(x) = Y0(x0) Y1(x1) Y2(x2) Y1(x3) Y2(x4) Y1(x5) v1, x = (x0..x5).
template <class F>
ModuleVectorT<F> build_V1(const std::vector<F>& x) {
  return build_vector(word_w1(), x, BasisLabel::kV1);
}

/// Coordinate order of the second chart along its word: (y2, y1, y4, y3, y0, y5).
inline constexpr std::array<int, 6> kV2CoordinateOrder = {2, 1, 4, 3, 0, 5};

/// V2(y) = Y2(y2) Y1(y1) Y2(y4) Y1(y3) Y0(y0) Y1(y5) v2bar, y = (y0..y5).
template <class F>
ModuleVectorT<F> build_V2(const std::vector<F>& y) {
  std::vector<F> along;
  for (int k : kV2CoordinateOrder) along.push_back(y.at(static_cast<std::size_t>(k)));
  return build_vector(word_w2(), along, BasisLabel::kV2bar);
}

/// Symbolic coordinates x0..x5 or y0..y5.
std::vector<RationalFunction> symbolic_x();
std::vector<RationalFunction> symbolic_y();

using RationalMatrix = LinearOperatorT<Rational>;
RationalMatrix chevalley_matrix(Chevalley which, int i);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);

/// Exact self-consistency of the action tables: commutators [e_i, f_j],
/// nilpotency orders, weight shifts, and the bar symmetry of weights.
std::vector<CheckResult> module_self_consistency();

}  // namespace geocrystal
