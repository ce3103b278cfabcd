#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace geocrystal {

/// Generalized Cartan matrix over the index set {0, ..., n-1}; entry(i, j) is
/// a_ij = <alpha_i^vee, alpha_j>.
class CartanMatrix {
 public:
  explicit CartanMatrix(std::vector<std::vector<int>> entries);

  int size() const noexcept { return static_cast<int>(a_.size()); }
  bool contains(int i) const noexcept { return i >= 0 && i < size(); }
  int entry(int i, int j) const;  // UnknownIndex outside the index set
  /// UnknownIndex when i is not a node.
  void require(int i) const;

 private:
  std::vector<std::vector<int>> a_;
};

/// Type D4^(3), nodes 0, 1, 2.
const CartanMatrix& d43_cartan();

/// Classical weight: coordinates over the fundamental weights Lambda_0..2 and
/// a separate multiple of delta.
struct ClassicalWeight {
  std::vector<std::int64_t> coords;
  std::int64_t delta = 0;

  ClassicalWeight operator+(const ClassicalWeight& o) const;
  ClassicalWeight operator-(const ClassicalWeight& o) const;
  ClassicalWeight operator-() const;
  ClassicalWeight operator*(std::int64_t k) const;
  friend bool operator==(const ClassicalWeight&, const ClassicalWeight&) = default;

  /// Drops delta.
  ClassicalWeight classical() const { return {coords, 0}; }
  /// "-2*L0 + L1", "0" for zero, "+ delta" suffix when delta is nonzero.
  std::string to_string() const;
};

ClassicalWeight zero_weight(const CartanMatrix& a = d43_cartan());
ClassicalWeight fundamental_weight(int i, const CartanMatrix& a = d43_cartan());
/// alpha_j = sum_i a_ij Lambda_i; alpha_0 also carries +delta.
ClassicalWeight simple_root(int j, const CartanMatrix& a = d43_cartan());
/// <alpha_i^vee, lambda>; delta pairs to zero.
std::int64_t pairing(int i, const ClassicalWeight& lambda, const CartanMatrix& a = d43_cartan());
ClassicalWeight simple_reflection(int i, const ClassicalWeight& lambda,
                                  const CartanMatrix& a = d43_cartan());

struct ReducedWord {
  std::vector<int> letters;

  std::size_t size() const noexcept { return letters.size(); }
  std::size_t distinct_letters() const;
  bool contains(int i) const;
  std::string to_string() const;  // "(0,1,2,1,2,1)"
};

/// Every letter must be a node; UnknownIndex otherwise.
ReducedWord make_word(std::vector<int> letters, const CartanMatrix& a = d43_cartan());

/// s0 s1 s2 s1 s2 s1, the word of the first chart.
const ReducedWord& word_w1();
/// s2 s1 s2 s1 s0 s1, the word of the second chart.
const ReducedWord& word_w2();

}  // namespace geocrystal
