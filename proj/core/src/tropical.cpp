#include "geocrystal/tropical.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

#include "parser_impl.hpp"

namespace geocrystal {

struct PLExpression::Node {
  Kind kind = Kind::kLinear;
  LinearForm form;  // kLinear
  std::shared_ptr<const Node> a, b;
  std::int64_t k = 0;  // kScale
};

namespace {

using Form = PLExpression::LinearForm;
using NodePtr = std::shared_ptr<const PLExpression::Node>;

NodePtr make_linear(Form f) {
  auto n = std::make_shared<PLExpression::Node>();
  n->kind = PLExpression::Kind::kLinear;
  n->form = std::move(f);
  return n;
}

NodePtr make_binary(PLExpression::Kind kind, NodePtr a, NodePtr b) {
  auto n = std::make_shared<PLExpression::Node>();
  n->kind = kind;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

Form combine(const Form& a, const Form& b, std::int64_t sign) {
  Form out = a;
  for (const auto& [v, coeff] : b.coefficients) {
    auto& slot = out.coefficients[v];
    slot += sign * coeff;
    if (slot == 0) out.coefficients.erase(v);
  }
  out.constant += sign * b.constant;
  return out;
}

bool is_zero_form(const Form& f) { return f.coefficients.empty() && f.constant == 0; }

std::string form_to_string(const Form& f) {
  std::string out;
  auto emit = [&](std::int64_t coeff, const std::string& body) {
    const bool negative = coeff < 0;
    const std::uint64_t mag = negative ? -static_cast<std::uint64_t>(coeff) : coeff;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (body.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += body;
    }
  };
  for (const auto& [v, coeff] : f.coefficients) emit(coeff, pl_variable_name(v));
  if (f.constant != 0 || out.empty()) {
    if (out.empty() && f.constant == 0) return "0";
    emit(f.constant, "");
  }
  return out;
}

std::string render(const PLExpression::Node& n);

// Safe as the right operand of '-': a max(...) or a single nonnegative atom.
bool atomic(const PLExpression::Node& n) {
  if (n.kind == PLExpression::Kind::kMax) return true;
  if (n.kind != PLExpression::Kind::kLinear) return false;
  const Form& f = n.form;
  if (f.coefficients.empty()) return f.constant >= 0;
  return f.coefficients.size() == 1 && f.constant == 0 && f.coefficients.begin()->second > 0;
}

std::string render_rhs_of_add(const PLExpression::Node& n) {
  std::string s = render(n);
  return s.front() == '-' ? "(" + s + ")" : s;
}

std::string render(const PLExpression::Node& n) {
  using Kind = PLExpression::Kind;
  switch (n.kind) {
    case Kind::kLinear:
      return form_to_string(n.form);
    case Kind::kMax:
      return "max(" + render(*n.a) + ", " + render(*n.b) + ")";
    case Kind::kAdd:
      return render(*n.a) + " + " + render_rhs_of_add(*n.b);
    case Kind::kSub:
      return render(*n.a) + " - " + (atomic(*n.b) ? render(*n.b) : "(" + render(*n.b) + ")");
    case Kind::kScale: {
      const std::string body = render(*n.a);
      const std::string term = atomic(*n.a) ? body : "(" + body + ")";
      const std::int64_t count = n.k < 0 ? -n.k : n.k;
      std::string out = n.k < 0 ? "0" : "";
      for (std::int64_t i = 0; i < count; ++i) {
        if (!out.empty()) out += n.k < 0 ? " - " : " + ";
        out += (n.k > 0 && i == 0) ? body : term;
      }
      return out;
    }
  }
  return {};
}

std::int64_t eval(const PLExpression::Node& n, const Cocharacter& xi) {
  using Kind = PLExpression::Kind;
  switch (n.kind) {
    case Kind::kLinear: {
      std::int64_t acc = n.form.constant;
      for (const auto& [v, coeff] : n.form.coefficients) {
        auto it = xi.find(v);
        if (it == xi.end()) {
          throw Error(ErrorCode::kUnassignedVariable, "no value for " + pl_variable_name(v));
        }
        acc += coeff * it->second;
      }
      return acc;
    }
    case Kind::kMax:
      return std::max(eval(*n.a, xi), eval(*n.b, xi));
    case Kind::kAdd:
      return eval(*n.a, xi) + eval(*n.b, xi);
    case Kind::kSub:
      return eval(*n.a, xi) - eval(*n.b, xi);
    case Kind::kScale:
      return n.k * eval(*n.a, xi);
  }
  return 0;
}

template <class Visit>
void walk(const PLExpression::Node* n, std::set<const PLExpression::Node*>& seen, Visit&& visit) {
  if (!n || !seen.insert(n).second) return;
  visit(*n);
  walk(n->a.get(), seen, visit);
  walk(n->b.get(), seen, visit);
}

}  // namespace

PLExpression::PLExpression() : node_(make_linear({})) {}

PLExpression PLExpression::constant(std::int64_t value) { return PLExpression(make_linear({{}, value})); }

PLExpression PLExpression::variable(VarId v) { return PLExpression(make_linear({{{v, 1}}, 0})); }

PLExpression PLExpression::linear(LinearForm form) {
  std::erase_if(form.coefficients, [](const auto& kv) { return kv.second == 0; });
  return PLExpression(make_linear(std::move(form)));
}

PLExpression max(const PLExpression& a, const PLExpression& b) {
  if (a.node_ == b.node_) return a;
  const auto* fa = a.linear_form();
  const auto* fb = b.linear_form();
  if (fa && fb && *fa == *fb) return a;
  return PLExpression(make_binary(PLExpression::Kind::kMax, a.node_, b.node_));
}

PLExpression operator+(const PLExpression& a, const PLExpression& b) {
  const auto* fa = a.linear_form();
  const auto* fb = b.linear_form();
  if (fa && fb) return PLExpression(make_linear(combine(*fa, *fb, 1)));
  if (fb && is_zero_form(*fb)) return a;
  if (fa && is_zero_form(*fa)) return b;
  return PLExpression(make_binary(PLExpression::Kind::kAdd, a.node_, b.node_));
}

PLExpression operator-(const PLExpression& a, const PLExpression& b) {
  const auto* fa = a.linear_form();
  const auto* fb = b.linear_form();
  if (fa && fb) return PLExpression(make_linear(combine(*fa, *fb, -1)));
  if (fb && is_zero_form(*fb)) return a;
  if (a.node_ == b.node_) return PLExpression();
  return PLExpression(make_binary(PLExpression::Kind::kSub, a.node_, b.node_));
}

PLExpression PLExpression::operator-() const { return PLExpression() - *this; }

PLExpression PLExpression::scaled(std::int64_t k) const {
  if (k == 1) return *this;
  if (k == 0) return PLExpression();
  if (const auto* f = linear_form()) {
    Form out;
    for (const auto& [v, coeff] : f->coefficients) out.coefficients[v] = k * coeff;
    out.constant = k * f->constant;
    return PLExpression(make_linear(std::move(out)));
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::kScale;
  n->a = node_;
  n->k = k;
  return PLExpression(std::move(n));
}

PLExpression::Kind PLExpression::kind() const noexcept { return node_->kind; }

const PLExpression::LinearForm* PLExpression::linear_form() const noexcept {
  return node_->kind == Kind::kLinear ? &node_->form : nullptr;
}

std::int64_t PLExpression::evaluate(const Cocharacter& xi) const { return eval(*node_, xi); }

std::vector<VarId> PLExpression::variables() const {
  std::set<VarId> vars;
  std::set<const Node*> seen;
  walk(node_.get(), seen, [&](const Node& n) {
    for (const auto& kv : n.form.coefficients) vars.insert(kv.first);
  });
  return {vars.begin(), vars.end()};
}

std::size_t PLExpression::node_count() const {
  std::set<const Node*> seen;
  walk(node_.get(), seen, [](const Node&) {});
  return seen.size();
}

std::string PLExpression::to_string() const { return render(*node_); }

std::string pl_variable_name(VarId v) {
  const std::string& name = VarRegistry::name(v);
  if (name.size() > 1 && name[0] == 'x' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
    return "xi_" + name.substr(1);
  }
  return "xi_" + name;
}

PositivityResult check_positive(const RationalFunction& f) {
  if (f.is_zero()) return {Positivity::kInconclusive, "zero function"};
  if (!f.num().all_coefficients_positive()) {
    return {Positivity::kInconclusive, "numerator has a non-positive coefficient"};
  }
  if (!f.den().all_coefficients_positive()) {
    return {Positivity::kInconclusive, "denominator has a non-positive coefficient"};
  }
  return {Positivity::kPositiveVerified, ""};
}

std::int64_t valuation(const RationalFunction& f) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroFunction, "valuation of the zero function");
  if (f.variables().size() > 1) {
    throw Error(ErrorCode::kConfigError, "valuation needs a univariate function, got " + f.to_string());
  }
  return static_cast<std::int64_t>(f.num().total_degree()) - static_cast<std::int64_t>(f.den().total_degree());
}

PLExpression tropicalize(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::kNotCertifiedPositive, "tropicalization of 0");
  if (!p.all_coefficients_positive()) {
    throw Error(ErrorCode::kNotCertifiedPositive, "polynomial has a non-positive coefficient");
  }
  std::optional<PLExpression> acc;
  for (const Term& t : p.terms()) {
    Form f;
    for (const auto& [v, e] : t.monomial.factors()) f.coefficients[v] = e;
    PLExpression lin = PLExpression::linear(std::move(f));
    acc = acc ? max(*acc, lin) : lin;
  }
  return *acc;
}

PLExpression tropicalize(const RationalFunction& f) {
  const PositivityResult p = check_positive(f);
  if (!p.verified()) throw Error(ErrorCode::kNotCertifiedPositive, p.reason + ": " + f.to_string());
  return tropicalize(f.num()) - tropicalize(f.den());
}

namespace {

using detail::Token;

struct MaxPlusBuilder {
  using Value = PLExpression;
  std::function<const PLExpression*(std::string_view)> lookup;

  [[noreturn]] static void reject(const Token& at, const std::string& what) {
    throw Error(ErrorCode::kNotCertifiedPositive, detail::position(at) + ": " + what + " is not subtraction-free");
  }

  Value integer(const Token& t) {
    if (t.text.find_first_not_of('0') == std::string::npos) reject(t, "the literal 0");
    return PLExpression();
  }

  Value identifier(const Token& t) {
    if (lookup) {
      if (const PLExpression* bound = lookup(t.text)) return *bound;
    }
    if (auto v = VarRegistry::find(t.text)) return PLExpression::variable(*v);
    throw Error(ErrorCode::kUnknownVariable, detail::position(t) + ": unknown variable '" + t.text + "'");
  }

  Value negate(Value, const Token& op) { reject(op, "negation"); }
  Value add(Value a, Value b, const Token&) { return max(a, b); }
  Value sub(Value, Value, const Token& op) { reject(op, "subtraction"); }
  Value mul(Value a, Value b, const Token&) { return a + b; }
  Value div(Value a, Value b, const Token&) { return a - b; }
  Value pow(Value v, std::int64_t e, const Token&) { return v.scaled(e); }
};

PLExpression run_max_plus(std::string_view text, MaxPlusBuilder& builder) {
  return detail::GrammarParser<MaxPlusBuilder>(detail::tokenize(text, ParseOptions{}), builder).parse();
}

}  // namespace

PLExpression tropicalize_expression(std::string_view text,
                                    const std::map<std::string, PLExpression, std::less<>>* bindings) {
  MaxPlusBuilder builder;
  if (bindings) {
    builder.lookup = [bindings](std::string_view name) -> const PLExpression* {
      auto it = bindings->find(name);
      return it == bindings->end() ? nullptr : &it->second;
    };
  }
  return run_max_plus(text, builder);
}

const PLExpression& TropicalFormulas::get(std::string_view name) {
  if (auto it = cache_.find(name); it != cache_.end()) return it->second;
  const FormulaEntry* entry = nullptr;
  for (const auto& e : table_->entries()) {
    if (e.name == name) entry = &e;
  }
  if (!entry) throw Error(ErrorCode::kUnknownFormula, "unknown formula '" + std::string(name) + "'");

  MaxPlusBuilder builder;
  builder.lookup = [this](std::string_view other) -> const PLExpression* {
    return table_->contains(other) ? &get(other) : nullptr;
  };
  try {
    PLExpression value = run_max_plus(entry->expression, builder);
    return cache_.emplace(entry->name, std::move(value)).first->second;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotCertifiedPositive) throw;
    throw Error(e.code(), entry->name + ": " + e.what());
  }
}

std::int64_t valuation_along(const RationalFunction& f, const Cocharacter& xi) {
  const VarId t = vars::t();
  const RationalFunction tf = RationalFunction::variable(t);
  Substitution sub;
  for (VarId v : f.variables()) {
    if (v == t) throw Error(ErrorCode::kConfigError, "the curve parameter t occurs in the function");
    auto it = xi.find(v);
    if (it == xi.end()) {
      throw Error(ErrorCode::kUnassignedVariable, "no value for " + pl_variable_name(v));
    }
    sub.emplace(v, tf.pow(it->second));
  }
  const RationalFunction along = substitute(f, sub);
  if (along.is_zero()) throw Error(ErrorCode::kZeroFunction, "function vanishes along the curve");
  return valuation(along);
}

PLProgram::PLProgram(const std::vector<PLExpression>& outputs, std::vector<VarId> inputs)
    : inputs_(std::move(inputs)) {
  std::unordered_map<VarId, std::uint32_t> slot;
  for (std::uint32_t i = 0; i < inputs_.size(); ++i) slot.emplace(inputs_[i], i);

  // Linear nodes first, then the rest in dependency order. Registers of the
  // second kind are provisional until the linear count is known.
  std::unordered_map<const PLExpression::Node*, std::uint32_t> linear_reg, op_reg;
  constexpr std::uint32_t kOpTag = 1u << 31;
  std::function<std::uint32_t(const PLExpression::Node&)> emit = [&](const PLExpression::Node& n) {
    if (n.kind == PLExpression::Kind::kLinear) {
      if (auto it = linear_reg.find(&n); it != linear_reg.end()) return it->second;
      const auto r = static_cast<std::uint32_t>(constants_.size());
      constants_.push_back(n.form.constant);
      rows_.resize(rows_.size() + inputs_.size(), 0);
      std::int64_t* row = rows_.data() + rows_.size() - inputs_.size();
      for (const auto& [v, coeff] : n.form.coefficients) {
        auto s = slot.find(v);
        if (s == slot.end()) {
          throw Error(ErrorCode::kUnassignedVariable, "program has no input for " + pl_variable_name(v));
        }
        row[s->second] = coeff;
      }
      linear_reg.emplace(&n, r);
      return r;
    }
    if (auto it = op_reg.find(&n); it != op_reg.end()) return it->second;
    Instruction ins{n.kind};
    ins.a = emit(*n.a);
    ins.b = n.kind == PLExpression::Kind::kScale ? ins.a : emit(*n.b);
    ins.k = n.k;
    code_.push_back(ins);
    const auto r = static_cast<std::uint32_t>(code_.size() - 1) | kOpTag;
    op_reg.emplace(&n, r);
    return r;
  };
  for (const auto& e : outputs) outputs_.push_back(emit(*e.node()));

  const auto linear_count = static_cast<std::uint32_t>(constants_.size());
  auto fix = [&](std::uint32_t& r) {
    if (r & kOpTag) r = (r & ~kOpTag) + linear_count;
  };
  for (auto& ins : code_) {
    fix(ins.a);
    fix(ins.b);
  }
  for (auto& r : outputs_) fix(r);
}

void PLProgram::run(std::span<const std::int64_t> in, std::span<std::int64_t> out,
                    std::vector<std::int64_t>& registers) const {
  const std::size_t width = inputs_.size();
  const std::size_t linear_count = constants_.size();
  registers.resize(linear_count + code_.size());
  std::int64_t* r = registers.data();
  const std::int64_t* x = in.data();
  const std::int64_t* row = rows_.data();
  auto linear_phase = [&]<std::size_t W>(std::integral_constant<std::size_t, W>) {
    const std::size_t w = W ? W : width;
    for (std::size_t i = 0; i < linear_count; ++i, row += w) {
      std::int64_t acc = constants_[i];
      for (std::size_t j = 0; j < w; ++j) acc += row[j] * x[j];
      r[i] = acc;
    }
  };
  // The crystal programs have seven inputs; a fixed width lets the compiler
  // unroll the rows.
  if (width == 7) {
    linear_phase(std::integral_constant<std::size_t, 7>{});
  } else {
    linear_phase(std::integral_constant<std::size_t, 0>{});
  }
  std::int64_t* dst = r + linear_count;
  for (const Instruction& ins : code_) {
    const std::int64_t u = r[ins.a], v = r[ins.b];
    switch (ins.op) {
      case PLExpression::Kind::kMax:
        *dst = std::max(u, v);
        break;
      case PLExpression::Kind::kAdd:
        *dst = u + v;
        break;
      case PLExpression::Kind::kSub:
        *dst = u - v;
        break;
      default:
        *dst = ins.k * u;
        break;
    }
    ++dst;
  }
  for (std::size_t j = 0; j < outputs_.size(); ++j) out[j] = r[outputs_[j]];
}

std::vector<std::int64_t> PLProgram::operator()(std::span<const std::int64_t> in) const {
  if (in.size() != inputs_.size()) throw Error(ErrorCode::kConfigError, "wrong number of program inputs");
  std::vector<std::int64_t> out(outputs_.size()), registers;
  run(in, out, registers);
  return out;
}

}  // namespace geocrystal
