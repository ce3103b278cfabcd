#pragma once

#include <vector>

#include "geocrystal/errors.hpp"
#include "geocrystal/rational_function.hpp"

namespace geocrystal {

/// Uniform "plug values into a formula" for the two fields the generic code
/// runs over: numbers give an EvalPoint, functions give a Substitution.
inline EvalPoint make_binding(const std::vector<VarId>& vars, const std::vector<Rational>& values) {
  EvalPoint p;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (values.at(k).is_zero()) throw Error(ErrorCode::kDomainExcluded, "coordinate is zero");
    p.set(vars[k], values[k]);
  }
  return p;
}

inline Substitution make_binding(const std::vector<VarId>& vars, const std::vector<RationalFunction>& values) {
  Substitution s;
  for (std::size_t k = 0; k < vars.size(); ++k) s.emplace(vars[k], values.at(k));
  return s;
}

inline void bind(EvalPoint& p, VarId v, const Rational& value) { p.set(v, value); }
inline void bind(Substitution& s, VarId v, const RationalFunction& value) { s.insert_or_assign(v, value); }

/// A vanishing denominator means the point is outside the map's domain.
inline Rational plug_in(const RationalFunction& f, const EvalPoint& p) {
  try {
    return f.evaluate(p);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kEvalDenominatorZero) throw Error(ErrorCode::kDomainExcluded, e.what());
    throw;
  }
}

inline RationalFunction plug_in(const RationalFunction& f, const Substitution& s) { return substitute(f, s); }

inline bool field_equal(const Rational& a, const Rational& b) { return a == b; }
inline bool field_equal(const RationalFunction& a, const RationalFunction& b) { return equal_symbolic(a, b); }

inline std::string field_string(const Rational& a) { return a.to_string(); }
inline std::string field_string(const RationalFunction& a) { return a.to_string(); }

std::vector<VarId> x_vars();
std::vector<VarId> y_vars();

}  // namespace geocrystal
