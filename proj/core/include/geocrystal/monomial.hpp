#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "geocrystal/variables.hpp"

namespace geocrystal {

/// A power product of variables with nonnegative 32-bit exponents, stored
/// sparsely (sorted by VarId, no zero exponents).
class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint32_t>;
  using Storage = boost::container::small_vector<Factor, 6>;

  Monomial() = default;  // the unit monomial

  static Monomial variable(VarId v, std::uint32_t exponent = 1);
  /// Builds from arbitrary (var, exponent) pairs; repeated vars are summed.
  static Monomial from_factors(std::initializer_list<Factor> factors);

  const Storage& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::uint64_t total_degree() const noexcept { return degree_; }
  std::uint32_t exponent(VarId v) const noexcept;

  /// Exponent overflow past 2^32-1 throws ExponentOverflow.
  Monomial operator*(const Monomial& other) const;
  Monomial pow(std::uint32_t k) const;
  bool divides(const Monomial& other) const noexcept;
  /// this / other; pre: other divides this.
  Monomial quotient(const Monomial& other) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  std::size_t hash() const noexcept;

  /// Graded lexicographic: total degree first, then the exponent of the
  /// lowest-indexed variable where the two differ.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.factors_ == b.factors_;
  }

  /// "x0^2*x3", or "1" for the unit.
  std::string to_string() const;

 private:
  Storage factors_;
  std::uint64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace geocrystal
