#pragma once

#include <cstdint>
#include <vector>

#include "geocrystal/cartan.hpp"
#include "geocrystal/errors.hpp"
#include "geocrystal/rational_function.hpp"

namespace geocrystal {

/// A point Y_{i_1}(c_1) ... Y_{i_k}(c_k) of B_i^-: a word and one coordinate
/// per letter. F is Rational for numeric points or RationalFunction for
/// symbolic ones.
template <class F>
struct TorusWordT {
  ReducedWord word;
  std::vector<F> coords;
};
using TorusWord = TorusWordT<RationalFunction>;

namespace detail {

/// t_m = 1 / (c_1^{a_{i_1,i}} ... c_{m-1}^{a_{i_{m-1},i}} c_m), for every
/// position m; entries at positions with i_m != i are unused.
template <class F>
std::vector<F> epsilon_terms(const ReducedWord& w, const std::vector<F>& c, int i, const CartanMatrix& a) {
  std::vector<F> t;
  t.reserve(c.size());
  F prefix(Rational(1));
  for (std::size_t m = 0; m < c.size(); ++m) {
    if (is_zero(c[m])) throw Error(ErrorCode::kZeroCoordinate, "torus coordinate is zero");
    t.push_back(F(Rational(1)) / (prefix * c[m]));
    const int e = a.entry(w.letters[m], i);
    if (e != 0) prefix = prefix * power(c[m], e);
  }
  return t;
}

}  // namespace detail

/// epsilon_i = sum over positions m with i_m = i of t_m; zero when i is absent.
template <class F>
F epsilon(const TorusWordT<F>& p, int i, const CartanMatrix& a = d43_cartan()) {
  a.require(i);
  const std::vector<F> t = detail::epsilon_terms(p.word, p.coords, i, a);
  F sum(Rational(0));
  for (std::size_t m = 0; m < t.size(); ++m) {
    if (p.word.letters[m] == i) sum = sum + t[m];
  }
  return sum;
}

/// gamma_i = prod_k c_k^{a_{i_k,i}}.
template <class F>
F gamma(const TorusWordT<F>& p, int i, const CartanMatrix& a = d43_cartan()) {
  a.require(i);
  F prod(Rational(1));
  for (std::size_t k = 0; k < p.coords.size(); ++k) {
    const int e = a.entry(p.word.letters[k], i);
    if (e != 0) prod = prod * power(p.coords[k], e);
  }
  return prod;
}

/// e_i^c: the coordinate at each position j with i_j = i is multiplied by
///   (sum_{m<=j} c t_m + sum_{m>j} t_m) / (sum_{m<j} c t_m + sum_{m>=j} t_m),
/// sums over positions with letter i. Identity when i does not occur.
template <class F>
TorusWordT<F> e_action(const TorusWordT<F>& p, int i, const F& c, const CartanMatrix& a = d43_cartan()) {
  a.require(i);
  if (!p.word.contains(i)) return p;
  const std::vector<F> t = detail::epsilon_terms(p.word, p.coords, i, a);
  const std::size_t k = t.size();
  // after[j] = sum_{m>j} t_m; kept subtraction-free so positivity is visible.
  std::vector<F> after(k, F(Rational(0)));
  for (std::size_t j = k - 1; j > 0; --j) {
    after[j - 1] = p.word.letters[j] == i ? after[j] + t[j] : after[j];
  }
  TorusWordT<F> out = p;
  F before(Rational(0));  // sum_{m<j} t_m
  for (std::size_t j = 0; j < k; ++j) {
    if (p.word.letters[j] != i) continue;
    const F num = c * (before + t[j]) + after[j];
    const F den = c * before + t[j] + after[j];
    if (is_zero(den)) throw Error(ErrorCode::kZeroDenominatorInUpdate, "coordinate update denominator is zero");
    out.coords[j] = p.coords[j] * (num / den);
    before = before + t[j];
  }
  return out;
}

}  // namespace geocrystal
