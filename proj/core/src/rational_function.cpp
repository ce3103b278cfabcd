#include "geocrystal/rational_function.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "geocrystal/errors.hpp"

namespace geocrystal {

RationalFunction::RationalFunction(const Rational& constant) : num_(constant), den_(Rational(1)) {}

RationalFunction::RationalFunction(Polynomial p) : num_(std::move(p)), den_(Rational(1)) {
  normalize();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

RationalFunction RationalFunction::variable(VarId v) {
  RationalFunction f;
  f.num_ = Polynomial::variable(v);
  return f;
}

void RationalFunction::normalize() {
  if (den_.is_zero()) {
    throw Error(ErrorCode::kDivisionByZeroFunction, "rational function with zero denominator");
  }
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  Rational scale = den_.content();
  if (den_.leading().coefficient.sign() < 0) scale = -scale;
  if (!scale.is_one()) {
    const Rational inv = scale.inverse();
    den_ = den_.scaled(inv);
    num_ = num_.scaled(inv);
  }
  if (!den_.is_constant()) {
    const Monomial g = Monomial::gcd(num_.monomial_gcd(), den_.monomial_gcd());
    if (!g.is_one()) {
      num_ = num_.divide_monomial(g);
      den_ = den_.divide_monomial(g);
    }
  }
  if (!den_.is_constant() && num_.size() == den_.size() &&
      num_.leading().monomial == den_.leading().monomial) {
    const Rational ratio = num_.leading().coefficient;  // den leading is primitive
    if (num_ == den_.scaled(ratio / den_.leading().coefficient)) {
      num_ = Polynomial(ratio / den_.leading().coefficient);
      den_ = Polynomial(Rational(1));
    }
  }
}

std::vector<VarId> RationalFunction::variables() const {
  std::vector<VarId> out = num_.variables();
  const std::vector<VarId> d = den_.variables();
  out.insert(out.end(), d.begin(), d.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction f = *this;
  f.num_ = -f.num_;
  return f;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZeroFunction, "inverse of the zero function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(std::int64_t k) const {
  if (k == 0) return RationalFunction(Rational(1));
  if (k < 0) return inverse().pow(-k);
  if (k > UINT32_MAX) throw Error(ErrorCode::kExponentOverflow, "exponent too large");
  RationalFunction f;
  f.num_ = num_.pow(static_cast<std::uint32_t>(k));
  f.den_ = den_.pow(static_cast<std::uint32_t>(k));
  return f;  // powers of a normal form are normal
}

namespace {

// den = monomial * core, with core free of monomial factors.
std::pair<Monomial, Polynomial> split_monomial(const Polynomial& den) {
  Monomial m = den.monomial_gcd();
  return {m, den.divide_monomial(m)};
}

}  // namespace

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  auto [ma, pa] = split_monomial(a.den_);
  auto [mb, pb] = split_monomial(b.den_);
  const Monomial l = Monomial::lcm(ma, mb);
  const Monomial fa = l.quotient(ma);
  const Monomial fb = l.quotient(mb);
  if (pa == pb) {
    return RationalFunction(a.num_.times_monomial(fa) + b.num_.times_monomial(fb),
                            pa.times_monomial(l));
  }
  return RationalFunction(a.num_.times_monomial(fa) * pb + b.num_.times_monomial(fb) * pa,
                          (pa * pb).times_monomial(l));
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

namespace {

// If n and d agree up to a scalar and a monomial factor, replaces them by
// those monomials; numerators keep the scalar.
void cancel_shared_core(Polynomial& n, Polynomial& d) {
  if (n.size() < 2 || n.size() != d.size()) return;
  const Monomial mn = n.monomial_gcd();
  const Monomial md = d.monomial_gcd();
  if (!(n.leading().monomial.quotient(mn) == d.leading().monomial.quotient(md))) return;
  const Rational k = n.leading().coefficient / d.leading().coefficient;
  if (!(n.divide_monomial(mn) == d.divide_monomial(md).scaled(k))) return;
  n = Polynomial::term(mn, k);
  d = Polynomial::term(md, Rational(1));
}

}  // namespace

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return RationalFunction(b.num_.scaled(a.num_.constant_value() / a.den_.constant_value()), b.den_);
  if (b.is_constant()) return RationalFunction(a.num_.scaled(b.num_.constant_value() / b.den_.constant_value()), a.den_);
  Polynomial an = a.num_;
  Polynomial ad = a.den_;
  Polynomial bn = b.num_;
  Polynomial bd = b.den_;
  cancel_shared_core(an, bd);
  cancel_shared_core(bn, ad);
  return RationalFunction(an * bn, ad * bd);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorCode::kDivisionByZeroFunction, "division by the zero function");
  RationalFunction inv;
  inv.num_ = b.den_;
  inv.den_ = b.num_;
  inv.normalize();
  return a * inv;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.num_ == b.num_ && a.den_ == b.den_) return true;
  if (a.is_zero() != b.is_zero()) return false;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

bool equal_symbolic(const RationalFunction& a, const RationalFunction& b) { return a == b; }

RationalFunction RationalFunction::cancel_factor(const Polynomial& p) const {
  if (p.is_constant()) return *this;
  RationalFunction f = *this;
  for (;;) {
    auto qn = f.num_.divide_exact(p);
    if (!qn) break;
    auto qd = f.den_.divide_exact(p);
    if (!qd) break;
    f.num_ = std::move(*qn);
    f.den_ = std::move(*qd);
  }
  f.normalize();
  return f;
}

Rational RationalFunction::evaluate(const EvalPoint& point) const {
  const Rational d = den_.evaluate(point);
  if (d.is_zero()) {
    throw Error(ErrorCode::kEvalDenominatorZero, "denominator vanishes at " + point.to_string());
  }
  return num_.evaluate(point) / d;
}

namespace {

bool denominator_needs_parens(const Polynomial& den) {
  if (den.size() > 1) return true;
  const Term& t = den.leading();
  return !t.coefficient.is_one() || t.monomial.factors().size() > 1;
}

}  // namespace

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return num_.scaled(den_.constant_value().inverse()).to_string();
  std::string out = num_.size() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
  out += "/";
  out += denominator_needs_parens(den_) ? "(" + den_.to_string() + ")" : den_.to_string();
  return out;
}

namespace {

class Substituter {
 public:
  explicit Substituter(const Substitution& images) : images_(images) {}

  // Returns p(images) as hom / Π d_v^{deg_v(p)}; the exponents are reported
  // through `degrees`.
  Polynomial homogenized(const Polynomial& p, std::map<VarId, std::uint32_t>& degrees) {
    degrees.clear();
    for (VarId v : p.variables()) {
      if (images_.count(v)) degrees[v] = p.degree_in(v);
    }
    Polynomial sum;
    for (const Term& t : p.terms()) {
      Polynomial prod(t.coefficient);
      Monomial kept;
      for (const auto& [v, e] : t.monomial.factors()) {
        auto it = images_.find(v);
        if (it == images_.end()) {
          kept = kept * Monomial::variable(v, e);
          continue;
        }
        prod = prod * num_power(v, it->second, e);
        const std::uint32_t rest = degrees[v] - e;
        if (rest) prod = prod * den_power(v, it->second, rest);
      }
      // Variables of p absent from this term still need their full d_v power.
      for (const auto& [v, deg] : degrees) {
        if (t.monomial.exponent(v) == 0) prod = prod * den_power(v, images_.at(v), deg);
      }
      sum += prod.times_monomial(kept);
    }
    return sum;
  }

  const Polynomial& den_power(VarId v, const RationalFunction& image, std::uint32_t k) {
    return cached(den_cache_, v, image.den(), k);
  }

 private:
  using Cache = std::map<std::pair<VarId, std::uint32_t>, Polynomial>;

  const Polynomial& num_power(VarId v, const RationalFunction& image, std::uint32_t k) {
    return cached(num_cache_, v, image.num(), k);
  }

  static const Polynomial& cached(Cache& cache, VarId v, const Polynomial& base, std::uint32_t k) {
    auto key = std::make_pair(v, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Polynomial value = k == 1 ? base : cached(cache, v, base, k - 1) * base;
    return cache.emplace(key, std::move(value)).first->second;
  }

  const Substitution& images_;
  Cache num_cache_;
  Cache den_cache_;
};

}  // namespace

RationalFunction substitute(const RationalFunction& f, const Substitution& images) {
  if (f.is_zero()) return f;
  Substituter s(images);
  std::map<VarId, std::uint32_t> num_deg;
  std::map<VarId, std::uint32_t> den_deg;
  Polynomial num = s.homogenized(f.num(), num_deg);
  Polynomial den = s.homogenized(f.den(), den_deg);
  if (den.is_zero()) {
    throw Error(ErrorCode::kDivisionByZeroFunction, "denominator vanishes after substitution");
  }
  // f(g) = num / Π d^{num_deg} * Π d^{den_deg} / den
  std::map<VarId, std::int64_t> shift;
  for (const auto& [v, e] : den_deg) shift[v] += e;
  for (const auto& [v, e] : num_deg) shift[v] -= e;
  for (const auto& [v, e] : shift) {
    if (e > 0) {
      num = num * s.den_power(v, images.at(v), static_cast<std::uint32_t>(e));
    } else if (e < 0) {
      den = den * s.den_power(v, images.at(v), static_cast<std::uint32_t>(-e));
    }
  }
  return RationalFunction(std::move(num), std::move(den));
}

}  // namespace geocrystal
