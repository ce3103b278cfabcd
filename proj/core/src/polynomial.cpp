#include "geocrystal/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "geocrystal/errors.hpp"

namespace geocrystal {

void EvalPoint::set(VarId v, Rational value) {
  if (value.is_zero()) {
    throw Error(ErrorCode::kDomainExcluded,
                "variable " + VarRegistry::name(v) + " assigned zero; points must lie on the torus");
  }
  values_[v] = std::move(value);
}

const Rational& EvalPoint::at(VarId v) const {
  auto it = values_.find(v);
  if (it == values_.end()) {
    throw Error(ErrorCode::kUnassignedVariable, "variable " + VarRegistry::name(v) + " is not assigned");
  }
  return it->second;
}

std::string EvalPoint::to_string() const {
  std::string out;
  for (const auto& [v, value] : values_) {
    if (!out.empty()) out += ", ";
    out += VarRegistry::name(v) + "=" + value.to_string();
  }
  return out;
}

namespace {

bool descending(const Term& a, const Term& b) { return a.monomial > b.monomial; }

// Merges two canonical term lists, with b's coefficients multiplied by sign.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    const auto cmp = i->monomial <=> j->monomial;
    if (cmp > 0) {
      out.push_back(*i++);
    } else if (cmp < 0) {
      out.push_back({j->monomial, sign > 0 ? j->coefficient : -j->coefficient});
      ++j;
    } else {
      Rational c = sign > 0 ? i->coefficient + j->coefficient : i->coefficient - j->coefficient;
      if (!c.is_zero()) out.push_back({i->monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i != a.end(); ++i) out.push_back(*i);
  for (; j != b.end(); ++j) out.push_back({j->monomial, sign > 0 ? j->coefficient : -j->coefficient});
  return out;
}

}  // namespace

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) terms_.push_back({Monomial{}, constant});
}

Polynomial Polynomial::variable(VarId v, std::uint32_t exponent) {
  return term(Monomial::variable(v, exponent), Rational(1));
}

Polynomial Polynomial::term(Monomial m, Rational coefficient) {
  Polynomial p;
  if (!coefficient.is_zero()) p.terms_.push_back({std::move(m), std::move(coefficient)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), descending);
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
    } else if (!t.coefficient.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::kConfigError, "polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_.front().coefficient;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw Error(ErrorCode::kZeroFunction, "zero polynomial has no leading term");
  return terms_.front();
}

std::uint64_t Polynomial::total_degree() const noexcept {
  // Graded order: the leading term has maximal total degree.
  return terms_.empty() ? 0 : terms_.front().monomial.total_degree();
}

std::uint32_t Polynomial::degree_in(VarId v) const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(v));
  return d;
}

std::uint32_t Polynomial::min_degree_in(VarId v) const noexcept {
  if (terms_.empty()) return 0;
  std::uint32_t d = UINT32_MAX;
  for (const auto& t : terms_) d = std::min(d, t.monomial.exponent(v));
  return d;
}

std::vector<VarId> Polynomial::variables() const {
  std::vector<VarId> out;
  for (const auto& t : terms_) {
    for (const auto& f : t.monomial.factors()) out.push_back(f.first);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  terms_ = merge(terms_, o.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.times_monomial(a.terms_[0].monomial).scaled(a.terms_[0].coefficient);
  if (b.size() == 1) return a.times_monomial(b.terms_[0].monomial).scaled(b.terms_[0].coefficient);

  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(small.size() * large.size());
  Rational product;
  for (const auto& s : small.terms_) {
    for (const auto& l : large.terms_) {
      product = s.coefficient;
      product *= l.coefficient;
      auto [it, inserted] = acc.try_emplace(s.monomial * l.monomial, product);
      if (!inserted) it->second += product;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms.push_back({m, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(), descending);
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
        !(a.terms_[i].coefficient == b.terms_[i].coefficient)) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  if (factor.is_zero()) return {};
  if (factor.is_one()) return *this;
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient *= factor;
  return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  Polynomial p;
  p.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves a monomial order.
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coefficient});
  return p;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
  Polynomial result(Rational(1));
  Polynomial base = *this;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return Rational(1);
  mpz_class g = 0;
  mpz_class l = 1;
  for (const auto& t : terms_) {
    g = gcd(g, t.coefficient.numerator());
    l = lcm(l, t.coefficient.denominator());
  }
  if (g < 0) g = -g;
  return Rational(mpq_class(g, l));
}

Monomial Polynomial::monomial_gcd() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.front().monomial;
  for (const auto& t : terms_) {
    if (g.is_one()) break;
    g = Monomial::gcd(g, t.monomial);
  }
  return g;
}

Polynomial Polynomial::divide_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  Polynomial p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial.quotient(m), t.coefficient});
  return p;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::kDivisionByZeroFunction, "division by the zero polynomial");
  if (is_zero()) return Polynomial{};
  const Term& lead = divisor.leading();
  if (divisor.size() == 1) {
    Monomial g = monomial_gcd();
    if (!lead.monomial.divides(g)) return std::nullopt;
    return divide_monomial(lead.monomial).scaled(lead.coefficient.inverse());
  }
  // Cheap rejection: per-variable degree bounds.
  for (VarId v : divisor.variables()) {
    if (divisor.degree_in(v) > degree_in(v)) return std::nullopt;
  }
  std::vector<Term> quotient;
  Polynomial remainder = *this;
  while (!remainder.is_zero()) {
    const Term& r = remainder.leading();
    if (!lead.monomial.divides(r.monomial)) return std::nullopt;
    Term q{r.monomial.quotient(lead.monomial), r.coefficient / lead.coefficient};
    remainder -= divisor.times_monomial(q.monomial).scaled(q.coefficient);
    quotient.push_back(std::move(q));
  }
  Polynomial p;
  p.terms_ = std::move(quotient);  // produced in decreasing order
  return p;
}

bool Polynomial::all_coefficients_positive() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coefficient.sign() > 0; });
}

Rational Polynomial::evaluate(const EvalPoint& point) const {
  std::unordered_map<std::uint64_t, Rational> powers;
  auto power_of = [&](VarId v, std::uint32_t e) -> const Rational& {
    const std::uint64_t key = (static_cast<std::uint64_t>(v.index) << 32) | e;
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, point.at(v).pow(e)).first;
    return it->second;
  };
  Rational sum;
  Rational term;
  for (const auto& t : terms_) {
    term = t.coefficient;
    for (const auto& [v, e] : t.monomial.factors()) term *= power_of(v, e);
    sum += term;
  }
  return sum;
}

namespace {

// One term in the expression grammar: sign handled by the caller.
std::string format_term_magnitude(const Monomial& m, const Rational& magnitude) {
  const mpz_class num = magnitude.numerator();
  const mpz_class den = magnitude.denominator();
  std::string out;
  if (m.is_one()) {
    out = num.get_str();
  } else {
    if (num != 1) out = num.get_str() + "*";
    out += m.to_string();
  }
  if (den != 1) out += "/" + den.get_str();
  return out;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coefficient.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += format_term_magnitude(t.monomial, t.coefficient.abs());
    first = false;
  }
  return out;
}

}  // namespace geocrystal
