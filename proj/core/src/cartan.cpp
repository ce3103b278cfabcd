#include "geocrystal/cartan.hpp"

#include <algorithm>
#include <set>

#include "geocrystal/errors.hpp"

namespace geocrystal {

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> entries) : a_(std::move(entries)) {
  const std::size_t n = a_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a_[i].size() != n) throw Error(ErrorCode::kConfigError, "Cartan matrix is not square");
    if (a_[i][i] != 2) throw Error(ErrorCode::kConfigError, "Cartan matrix diagonal must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a_[i][j] > 0) throw Error(ErrorCode::kConfigError, "off-diagonal Cartan entry is positive");
      if ((a_[i][j] == 0) != (a_[j][i] == 0)) {
        throw Error(ErrorCode::kConfigError, "Cartan zero pattern is not symmetric");
      }
    }
  }
}

void CartanMatrix::require(int i) const {
  if (!contains(i)) throw Error(ErrorCode::kUnknownIndex, "node " + std::to_string(i) + " is not in the index set");
}

int CartanMatrix::entry(int i, int j) const {
  require(i);
  require(j);
  return a_[i][j];
}

const CartanMatrix& d43_cartan() {
  static const CartanMatrix a({{2, -1, 0}, {-1, 2, -3}, {0, -1, 2}});
  return a;
}

ClassicalWeight ClassicalWeight::operator+(const ClassicalWeight& o) const {
  ClassicalWeight r = *this;
  for (std::size_t k = 0; k < r.coords.size(); ++k) r.coords[k] += o.coords.at(k);
  r.delta += o.delta;
  return r;
}

ClassicalWeight ClassicalWeight::operator-() const { return *this * -1; }

ClassicalWeight ClassicalWeight::operator-(const ClassicalWeight& o) const { return *this + (-o); }

ClassicalWeight ClassicalWeight::operator*(std::int64_t k) const {
  ClassicalWeight r = *this;
  for (auto& c : r.coords) c *= k;
  r.delta *= k;
  return r;
}

std::string ClassicalWeight::to_string() const {
  std::string out;
  auto add = [&](std::int64_t k, const std::string& name) {
    if (k == 0) return;
    if (out.empty()) {
      if (k < 0) out += "-";
    } else {
      out += k < 0 ? " - " : " + ";
    }
    const std::int64_t m = k < 0 ? -k : k;
    if (m != 1) out += std::to_string(m) + "*";
    out += name;
  };
  for (std::size_t i = 0; i < coords.size(); ++i) add(coords[i], "L" + std::to_string(i));
  add(delta, "delta");
  return out.empty() ? "0" : out;
}

ClassicalWeight zero_weight(const CartanMatrix& a) {
  return {std::vector<std::int64_t>(static_cast<std::size_t>(a.size()), 0), 0};
}

ClassicalWeight fundamental_weight(int i, const CartanMatrix& a) {
  a.require(i);
  ClassicalWeight w = zero_weight(a);
  w.coords[static_cast<std::size_t>(i)] = 1;
  return w;
}

ClassicalWeight simple_root(int j, const CartanMatrix& a) {
  a.require(j);
  ClassicalWeight w = zero_weight(a);
  for (int i = 0; i < a.size(); ++i) w.coords[static_cast<std::size_t>(i)] = a.entry(i, j);
  if (j == 0) w.delta = 1;
  return w;
}

std::int64_t pairing(int i, const ClassicalWeight& lambda, const CartanMatrix& a) {
  a.require(i);
  return lambda.coords.at(static_cast<std::size_t>(i));
}

ClassicalWeight simple_reflection(int i, const ClassicalWeight& lambda, const CartanMatrix& a) {
  return lambda - simple_root(i, a) * pairing(i, lambda, a);
}

std::size_t ReducedWord::distinct_letters() const {
  return std::set<int>(letters.begin(), letters.end()).size();
}

bool ReducedWord::contains(int i) const {
  return std::find(letters.begin(), letters.end(), i) != letters.end();
}

std::string ReducedWord::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(letters[k]);
  }
  return out + ")";
}

ReducedWord make_word(std::vector<int> letters, const CartanMatrix& a) {
  for (int i : letters) a.require(i);
  return ReducedWord{std::move(letters)};
}

const ReducedWord& word_w1() {
  static const ReducedWord w = make_word({0, 1, 2, 1, 2, 1});
  return w;
}

const ReducedWord& word_w2() {
  static const ReducedWord w = make_word({2, 1, 2, 1, 0, 1});
  return w;
}

}  // namespace geocrystal
