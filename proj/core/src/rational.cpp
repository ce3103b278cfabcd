#include "geocrystal/rational.hpp"

#include "geocrystal/errors.hpp"

namespace geocrystal {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw Error(ErrorCode::kDivisionByZeroFunction, "rational with zero denominator");
  }
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  mpq_class v;
  if (s.empty() || v.set_str(s, 10) != 0 || v.get_den() == 0) {
    throw Error(ErrorCode::kConfigError, "not a rational number: '" + s + "'");
  }
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw Error(ErrorCode::kDivisionByZeroFunction, "inverse of zero");
  }
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw Error(ErrorCode::kDivisionByZeroFunction, "division by zero");
  }
  value_ /= o.value_;
  return *this;
}

Rational Rational::pow(std::int64_t exponent) const {
  if (exponent < 0) {
    return inverse().pow(-exponent);
  }
  mpz_class n;
  mpz_class d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  mpq_class r(n, d);
  return Rational(std::move(r));
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace geocrystal
