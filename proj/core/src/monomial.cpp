#include "geocrystal/monomial.hpp"

#include <algorithm>
#include <limits>

#include "geocrystal/errors.hpp"

namespace geocrystal {
namespace {

std::uint32_t checked_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  if (s > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kExponentOverflow, "exponent exceeds 32 bits");
  }
  return static_cast<std::uint32_t>(s);
}

}  // namespace

Monomial Monomial::variable(VarId v, std::uint32_t exponent) {
  Monomial m;
  if (exponent != 0) {
    m.factors_.emplace_back(v, exponent);
    m.degree_ = exponent;
  }
  return m;
}

Monomial Monomial::from_factors(std::initializer_list<Factor> factors) {
  Monomial m;
  for (const auto& [v, e] : factors) m = m * variable(v, e);
  return m;
}

std::uint32_t Monomial::exponent(VarId v) const noexcept {
  for (const auto& [var, e] : factors_) {
    if (var == v) return e;
    if (var > v) break;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      r.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, checked_add(a->second, b->second));
      ++a;
      ++b;
    }
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::pow(std::uint32_t k) const {
  Monomial r;
  if (k == 0) return r;
  r.factors_.reserve(factors_.size());
  for (const auto& [v, e] : factors_) {
    const std::uint64_t p = static_cast<std::uint64_t>(e) * k;
    r.factors_.emplace_back(v, checked_add(p, 0));
    r.degree_ += p;
  }
  return r;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  auto b = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (b != other.factors_.end() && b->first < v) ++b;
    if (b == other.factors_.end() || b->first != v || b->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial r;
  auto b = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    std::uint32_t sub = 0;
    if (b != other.factors_.end() && b->first == v) {
      sub = b->second;
      ++b;
    }
    if (sub > e) throw Error(ErrorCode::kConfigError, "monomial quotient is not exact");
    if (e - sub) {
      r.factors_.emplace_back(v, e - sub);
      r.degree_ += e - sub;
    }
  }
  if (b != other.factors_.end()) throw Error(ErrorCode::kConfigError, "monomial quotient is not exact");
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto j = b.factors_.begin();
  for (const auto& [v, e] : a.factors_) {
    while (j != b.factors_.end() && j->first < v) ++j;
    if (j != b.factors_.end() && j->first == v) {
      const std::uint32_t m = std::min(e, j->second);
      r.factors_.emplace_back(v, m);
      r.degree_ += m;
    }
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  return (a * b).quotient(gcd(a, b));
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [v, e] : factors_) {
    h ^= (static_cast<std::size_t>(v.index) << 32 | e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first != j->first) {
      // The monomial that has the lower-indexed variable is larger.
      return i->first < j->first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (i->second != j->second) return i->second <=> j->second;
    ++i;
    ++j;
  }
  if (i != a.factors_.end()) return std::strong_ordering::greater;
  if (j != b.factors_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += '*';
    out += VarRegistry::name(v);
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

}  // namespace geocrystal
