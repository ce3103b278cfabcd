#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "geocrystal/polynomial.hpp"

namespace geocrystal {

/// Quotient num/den of polynomials over Q.
///
/// Normal form: den has coprime integer coefficients and a positive leading
/// coefficient, the monomial gcd of num and den is 1, and the zero function is
/// 0/1. No polynomial gcd is taken, so two equal functions may be stored
/// differently; compare with equal_symbolic (or operator==, which is the same).
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(const Rational& constant);  // NOLINT(implicit)
  RationalFunction(std::int64_t constant) : RationalFunction(Rational(constant)) {}  // NOLINT
  RationalFunction(Polynomial p);  // NOLINT(implicit)
  /// DivisionByZeroFunction when den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable(VarId v);

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  std::vector<VarId> variables() const;

  RationalFunction operator-() const;
  RationalFunction inverse() const;  // DivisionByZeroFunction on zero
  RationalFunction pow(std::int64_t k) const;

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  /// Cross-multiplicative equality; complete and exact.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  /// Divides num and den by p as often as p divides both exactly.
  RationalFunction cancel_factor(const Polynomial& p) const;

  /// EvalDenominatorZero when den vanishes at the point.
  Rational evaluate(const EvalPoint& point) const;

  std::string to_string() const;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

bool equal_symbolic(const RationalFunction& a, const RationalFunction& b);

using Substitution = std::map<VarId, RationalFunction>;

/// f with each mapped variable replaced by its image; unmapped variables stay.
/// DivisionByZeroFunction if the result's denominator collapses to zero.
RationalFunction substitute(const RationalFunction& f, const Substitution& images);

/// Field-generic helpers shared with Rational (see rational.hpp).
inline RationalFunction power(const RationalFunction& f, std::int64_t k) { return f.pow(k); }
inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

}  // namespace geocrystal
