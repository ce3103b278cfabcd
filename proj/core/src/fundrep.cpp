#include "geocrystal/fundrep.hpp"

#include <string>

namespace geocrystal {

namespace {

using B = BasisLabel;

struct Tables {
  std::array<std::vector<Transition>, 3> e;
  std::array<std::vector<Transition>, 3> f;
};

const Tables& tables() {
  static const Tables t = [] {
    const Rational one(1);
    const Rational half(1, 2);
    const Rational three_halves(3, 2);
    Tables t;
    t.f[0] = {{B::kV0, B::kV1, one},        {B::kV3bar, B::kV2, one}, {B::kV2bar, B::kV3, one},
              {B::kV1bar, B::kEmpty, one},  {B::kV1bar, B::kV0, half}, {B::kEmpty, B::kV1, three_halves}};
    t.f[1] = {{B::kV1, B::kV2, one}, {B::kV3, B::kV0, one}, {B::kV0, B::kV3bar, Rational(2)},
              {B::kV2bar, B::kV1bar, one}};
    t.f[2] = {{B::kV2, B::kV3, one}, {B::kV3bar, B::kV2bar, one}};
    t.e[0] = {{B::kV1, B::kEmpty, one},  {B::kV1, B::kV0, half},  {B::kV2, B::kV3bar, one},
              {B::kV3, B::kV2bar, one},  {B::kV0, B::kV1bar, one}, {B::kEmpty, B::kV1bar, three_halves}};
    t.e[1] = {{B::kV2, B::kV1, one}, {B::kV0, B::kV3, Rational(2)}, {B::kV3bar, B::kV0, one},
              {B::kV1bar, B::kV2bar, one}};
    t.e[2] = {{B::kV3, B::kV2, one}, {B::kV2bar, B::kV3bar, one}};
    return t;
  }();
  return t;
}

}  // namespace

std::string_view label_name(BasisLabel b) {
  static constexpr std::array<std::string_view, kModuleDim> names = {
      "v1", "v2", "v3", "v0", "empty", "v3bar", "v2bar", "v1bar"};
  return names[index_of(b)];
}

std::optional<BasisLabel> parse_label(std::string_view name) {
  for (BasisLabel b : kBasis) {
    if (label_name(b) == name) return b;
  }
  return std::nullopt;
}

ClassicalWeight weight_of(BasisLabel b) {
  auto w = [](std::int64_t a, std::int64_t c, std::int64_t d) { return ClassicalWeight{{a, c, d}, 0}; };
  switch (b) {
    case B::kV1: return w(-2, 1, 0);
    case B::kV2: return w(-1, -1, 1);
    case B::kV3: return w(-1, 2, -1);
    case B::kV0:
    case B::kEmpty: return w(0, 0, 0);
    case B::kV3bar: return w(1, -2, 1);
    case B::kV2bar: return w(1, 1, -1);
    case B::kV1bar: return w(2, -1, 0);
  }
  return w(0, 0, 0);
}

const std::vector<Transition>& action_table(Chevalley which, int i) {
  d43_cartan().require(i);
  const auto& t = tables();
  return which == Chevalley::kE ? t.e[static_cast<std::size_t>(i)] : t.f[static_cast<std::size_t>(i)];
}

std::vector<RationalFunction> symbolic_x() {
  std::vector<RationalFunction> v;
  for (int k = 0; k < 6; ++k) v.push_back(RationalFunction::variable(vars::x(k)));
  return v;
}

std::vector<RationalFunction> symbolic_y() {
  std::vector<RationalFunction> v;
  for (int k = 0; k < 6; ++k) v.push_back(RationalFunction::variable(vars::y(k)));
  return v;
}

namespace {

RationalMatrix zero_matrix() {
  RationalMatrix m;
  for (auto& row : m) row.fill(Rational(0));
  return m;
}

bool is_zero_matrix(const RationalMatrix& m) {
  for (const auto& row : m) {
    for (const auto& x : row) {
      if (!x.is_zero()) return false;
    }
  }
  return true;
}

std::string matrix_entry(const RationalMatrix& m, std::size_t r, std::size_t c) {
  return "entry (" + std::string(label_name(kBasis[r])) + ", " + std::string(label_name(kBasis[c])) +
         ") = " + m[r][c].to_string();
}

}  // namespace

RationalMatrix chevalley_matrix(Chevalley which, int i) {
  RationalMatrix m = zero_matrix();
  for (const Transition& t : action_table(which, i)) m[index_of(t.to)][index_of(t.from)] += t.coefficient;
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix m = zero_matrix();
  for (std::size_t r = 0; r < kModuleDim; ++r) {
    for (std::size_t k = 0; k < kModuleDim; ++k) {
      if (a[r][k].is_zero()) continue;
      for (std::size_t c = 0; c < kModuleDim; ++c) m[r][c] += a[r][k] * b[k][c];
    }
  }
  return m;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix m = a;
  for (std::size_t r = 0; r < kModuleDim; ++r) {
    for (std::size_t c = 0; c < kModuleDim; ++c) m[r][c] -= b[r][c];
  }
  return m;
}

std::vector<CheckResult> module_self_consistency() {
  std::vector<CheckResult> out;
  const CartanMatrix& a = d43_cartan();

  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      const std::string name = "module.commutator.e" + std::to_string(i) + "f" + std::to_string(j);
      out.push_back(timed_check(name, CheckMode::kExhaustive, [&](CheckResult& r) {
        const RationalMatrix e = chevalley_matrix(Chevalley::kE, i);
        const RationalMatrix f = chevalley_matrix(Chevalley::kF, j);
        RationalMatrix expected = zero_matrix();
        if (i == j) {
          for (BasisLabel b : kBasis) expected[index_of(b)][index_of(b)] = Rational(pairing(i, weight_of(b)));
        }
        const RationalMatrix diff = (e * f - f * e) - expected;
        for (std::size_t row = 0; row < kModuleDim; ++row) {
          for (std::size_t col = 0; col < kModuleDim; ++col) {
            if (!diff[row][col].is_zero()) {
              r.status = CheckStatus::kFail;
              r.witness = "commutator minus expected: " + matrix_entry(diff, row, col);
              return;
            }
          }
        }
      }));
    }
  }

  const std::array<int, 3> orders = {3, 3, 2};
  for (Chevalley which : {Chevalley::kE, Chevalley::kF}) {
    for (int i = 0; i < a.size(); ++i) {
      const std::string name = std::string("module.nilpotency.") + (which == Chevalley::kE ? "e" : "f") +
                               std::to_string(i);
      out.push_back(timed_check(name, CheckMode::kExhaustive, [&](CheckResult& r) {
        const RationalMatrix m = chevalley_matrix(which, i);
        RationalMatrix p = m;
        for (int k = 1; k < orders[static_cast<std::size_t>(i)] - 1; ++k) p = p * m;
        if (is_zero_matrix(p)) {
          r.status = CheckStatus::kFail;
          r.witness = "power " + std::to_string(orders[static_cast<std::size_t>(i)] - 1) + " already vanishes";
          return;
        }
        if (!is_zero_matrix(p * m)) {
          r.status = CheckStatus::kFail;
          r.witness = "power " + std::to_string(orders[static_cast<std::size_t>(i)]) + " is nonzero";
        }
        r.detail = "order " + std::to_string(orders[static_cast<std::size_t>(i)]);
      }));
    }
  }

  for (Chevalley which : {Chevalley::kE, Chevalley::kF}) {
    for (int i = 0; i < a.size(); ++i) {
      const std::string name = std::string("module.weight_shift.") + (which == Chevalley::kE ? "e" : "f") +
                               std::to_string(i);
      out.push_back(timed_check(name, CheckMode::kExhaustive, [&](CheckResult& r) {
        const ClassicalWeight shift = simple_root(i).classical() * (which == Chevalley::kE ? 1 : -1);
        for (const Transition& t : action_table(which, i)) {
          if (!(weight_of(t.to) == weight_of(t.from) + shift)) {
            r.status = CheckStatus::kFail;
            r.witness = std::string(label_name(t.from)) + " -> " + std::string(label_name(t.to));
            return;
          }
        }
      }));
    }
  }

  out.push_back(timed_check("module.weight_bar_symmetry", CheckMode::kExhaustive, [&](CheckResult& r) {
    const std::array<std::pair<B, B>, 3> pairs = {
        {{B::kV1, B::kV1bar}, {B::kV2, B::kV2bar}, {B::kV3, B::kV3bar}}};
    for (const auto& [v, vbar] : pairs) {
      if (!(weight_of(vbar) == -weight_of(v))) {
        r.status = CheckStatus::kFail;
        r.witness = std::string(label_name(vbar));
        return;
      }
    }
  }));
  return out;
}

}  // namespace geocrystal
