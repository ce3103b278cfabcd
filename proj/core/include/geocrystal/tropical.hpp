#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geocrystal/formula_table.hpp"
#include "geocrystal/rational_function.hpp"

namespace geocrystal {

enum class Positivity { kPositiveVerified, kInconclusive };

struct PositivityResult {
  Positivity status = Positivity::kInconclusive;
  std::string reason;  // empty when verified

  bool verified() const noexcept { return status == Positivity::kPositiveVerified; }
};

/// Sufficient certificate only: both stored numerator and denominator have
/// strictly positive coefficients. Never claims non-positivity.
PositivityResult check_positive(const RationalFunction& f);

/// Degree at infinity of a univariate f: deg num - deg den. ZeroFunction for
/// f = 0, ConfigError if f involves more than one variable.
std::int64_t valuation(const RationalFunction& f);

/// A point of the cocharacter lattice, one integer per variable.
using Cocharacter = std::map<VarId, std::int64_t>;

/// Max-plus piecewise-linear expression. Nodes are immutable and shared, so
/// a subexpression used several times is stored once.
class PLExpression {
 public:
  enum class Kind { kLinear, kMax, kAdd, kSub, kScale };

  struct LinearForm {
    std::map<VarId, std::int64_t> coefficients;  // no zero entries
    std::int64_t constant = 0;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
  };

  struct Node;

  PLExpression();  // the constant 0
  static PLExpression constant(std::int64_t value);
  static PLExpression variable(VarId v);
  static PLExpression linear(LinearForm form);

  friend PLExpression max(const PLExpression& a, const PLExpression& b);
  friend PLExpression operator+(const PLExpression& a, const PLExpression& b);
  friend PLExpression operator-(const PLExpression& a, const PLExpression& b);
  PLExpression operator-() const;
  PLExpression scaled(std::int64_t k) const;

  Kind kind() const noexcept;
  /// The form when kind() == kLinear, nullptr otherwise.
  const LinearForm* linear_form() const noexcept;
  const Node* node() const noexcept { return node_.get(); }

  std::int64_t evaluate(const Cocharacter& xi) const;  // UnassignedVariable
  std::vector<VarId> variables() const;
  std::size_t node_count() const;  // distinct nodes

  /// max(e, e) | e + e | e - e | n*xi_k | integer. Scaling by k is written as
  /// a k-fold sum.
  std::string to_string() const;

 private:
  explicit PLExpression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Display name of the lattice coordinate dual to v: x3 -> xi_3, c -> xi_c.
std::string pl_variable_name(VarId v);

/// trop(num) - trop(den), where trop of a polynomial is the max over its
/// monomials of their exponent vectors (coefficients contribute 0).
/// NotCertifiedPositive unless check_positive(f) verifies.
PLExpression tropicalize(const RationalFunction& f);
PLExpression tropicalize(const Polynomial& p);

/// Tropicalizes an expression as written: + -> max, * -> +, / -> -, ^k -> k*,
/// positive literals -> 0. Subtraction, negation and the literal 0 raise
/// NotCertifiedPositive. Identifiers resolve through `bindings` first.
PLExpression tropicalize_expression(std::string_view text,
                                    const std::map<std::string, PLExpression, std::less<>>* bindings = nullptr);

/// Lazily tropicalized formula table; names used inside a formula become
/// shared subexpressions.
class TropicalFormulas {
 public:
  explicit TropicalFormulas(const FormulaTable& table) : table_(&table) {}
  const PLExpression& get(std::string_view name);  // UnknownFormula, NotCertifiedPositive

 private:
  const FormulaTable* table_;
  std::map<std::string, PLExpression, std::less<>> cache_;
};

/// Valuation of f along the curve v = t^xi[v] (every variable of f must be
/// assigned). Independent of PLExpression: it substitutes and takes degrees.
std::int64_t valuation_along(const RationalFunction& f, const Cocharacter& xi);

/// Straight-line compilation of several expressions over a fixed input order.
/// Shared nodes are evaluated once per run.
class PLProgram {
 public:
  PLProgram(const std::vector<PLExpression>& outputs, std::vector<VarId> inputs);

  std::size_t input_count() const noexcept { return inputs_.size(); }
  std::size_t output_count() const noexcept { return outputs_.size(); }
  std::size_t instruction_count() const noexcept { return constants_.size() + code_.size(); }

  /// `registers` is caller-owned scratch so runs can proceed in parallel.
  void run(std::span<const std::int64_t> in, std::span<std::int64_t> out,
           std::vector<std::int64_t>& registers) const;
  std::vector<std::int64_t> operator()(std::span<const std::int64_t> in) const;

 private:
  // Registers [0, linear count) hold the linear nodes, computed as one dense
  // matrix-vector product; the remaining registers follow `code_`.
  struct Instruction {
    PLExpression::Kind op;
    std::uint32_t a = 0, b = 0;  // operand registers
    std::int64_t k = 0;          // scale factor
  };
  std::vector<VarId> inputs_;
  std::vector<std::int64_t> rows_;       // linear count x input count
  std::vector<std::int64_t> constants_;  // per linear node
  std::vector<Instruction> code_;
  std::vector<std::uint32_t> outputs_;
};

}  // namespace geocrystal
