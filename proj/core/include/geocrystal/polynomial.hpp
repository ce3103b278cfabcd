#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geocrystal/monomial.hpp"
#include "geocrystal/rational.hpp"
#include "geocrystal/variables.hpp"

namespace geocrystal {

/// Assignment of nonzero rationals to variables: a point of the torus.
class EvalPoint {
 public:
  EvalPoint() = default;

  /// Zero values are rejected with DomainExcluded: points live on the torus.
  void set(VarId v, Rational value);
  const Rational& at(VarId v) const;  // UnassignedVariable if absent
  bool contains(VarId v) const { return values_.count(v) != 0; }
  const std::map<VarId, Rational>& values() const noexcept { return values_; }

  /// "x0=3, x1=5/2"
  std::string to_string() const;

 private:
  std::map<VarId, Rational> values_;
};

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Sparse multivariate polynomial over Q in canonical form: terms strictly
/// decreasing in graded-lex order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;  // zero
  Polynomial(const Rational& constant);  // NOLINT(implicit)

  static Polynomial variable(VarId v, std::uint32_t exponent = 1);
  static Polynomial term(Monomial m, Rational coefficient);
  /// Canonicalizes: merges equal monomials, drops zeros, sorts.
  static Polynomial from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term value; pre: is_constant().
  Rational constant_value() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  const Term& leading() const;

  std::uint64_t total_degree() const noexcept;
  std::uint32_t degree_in(VarId v) const noexcept;
  std::uint32_t min_degree_in(VarId v) const noexcept;
  std::vector<VarId> variables() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& factor) const;
  Polynomial times_monomial(const Monomial& m) const;
  Polynomial pow(std::uint32_t k) const;

  /// Positive rational c such that this/c has coprime integer coefficients.
  Rational content() const;
  Monomial monomial_gcd() const;
  /// pre: m divides every term.
  Polynomial divide_monomial(const Monomial& m) const;
  /// Quotient when divisor divides this exactly, nullopt otherwise.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  bool all_coefficients_positive() const noexcept;

  Rational evaluate(const EvalPoint& point) const;

  /// Expression-grammar rendering with rational coefficients, e.g. "x0^2/2 + x3".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace geocrystal
