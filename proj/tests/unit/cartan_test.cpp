#include <gtest/gtest.h>

#include <random>

#include "geocrystal/cartan.hpp"
#include "geocrystal/errors.hpp"
#include "geocrystal/fundrep.hpp"

using namespace geocrystal;

namespace {

ClassicalWeight apply_word(const ReducedWord& w, ClassicalWeight lambda) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) lambda = simple_reflection(*it, lambda);
  return lambda;
}

}  // namespace

TEST(Cartan, Entries) {
  const CartanMatrix& a = d43_cartan();
  EXPECT_EQ(a.size(), 3);
  EXPECT_EQ(a.entry(1, 2), -3);
  EXPECT_EQ(a.entry(2, 1), -1);
  EXPECT_EQ(a.entry(0, 2), 0);
  EXPECT_THROW((void)a.entry(3, 0), Error);
}

TEST(Cartan, Pairings) {
  EXPECT_EQ(pairing(1, simple_root(2)), -3);
  EXPECT_EQ(pairing(0, fundamental_weight(0)), 1);
  EXPECT_EQ(pairing(2, weight_of(BasisLabel::kV2)), 1);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(pairing(i, simple_root(j)), d43_cartan().entry(i, j));
  }
}

TEST(Cartan, Reflections) {
  const ClassicalWeight l0 = fundamental_weight(0), l1 = fundamental_weight(1), l2 = fundamental_weight(2);
  EXPECT_EQ(simple_reflection(1, l1).classical(), (l0 - l1 + l2).classical());
  EXPECT_EQ(simple_reflection(2, l0), l0);
  EXPECT_EQ(weight_of(BasisLabel::kV1), l1 - l0 * 2);
  EXPECT_EQ(weight_of(BasisLabel::kV2).to_string(), "-L0 - L1 + L2");
}

TEST(CartanProperty, ReflectionsAreInvolutions) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coeff(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    ClassicalWeight lambda = zero_weight();
    for (int i = 0; i < 3; ++i) lambda = lambda + fundamental_weight(i) * coeff(rng);
    lambda.delta = coeff(rng);
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(simple_reflection(i, simple_reflection(i, lambda)), lambda);
      // s_i changes lambda by a multiple of alpha_i only.
      EXPECT_EQ(simple_reflection(i, lambda), lambda - simple_root(i) * pairing(i, lambda));
    }
  }
}

// Reading a word backwards gives the inverse element.
TEST(CartanProperty, ReversedWordInverts) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    ClassicalWeight lambda = zero_weight();
    for (int i = 0; i < 3; ++i) lambda = lambda + fundamental_weight(i) * coeff(rng);
    for (const ReducedWord& w : {word_w1(), word_w2()}) {
      std::vector<int> letters(w.letters.rbegin(), w.letters.rend());
      EXPECT_EQ(apply_word(make_word(letters), apply_word(w, lambda)), lambda);
    }
  }
  EXPECT_EQ(word_w1().to_string(), "(0,1,2,1,2,1)");
  EXPECT_EQ(word_w2().distinct_letters(), 3u);
}

TEST(Cartan, InvalidMatrixRejected) {
  EXPECT_THROW(CartanMatrix({{2, -1}, {0, 2}}), Error);
  EXPECT_THROW(make_word({0, 3}), Error);
}
