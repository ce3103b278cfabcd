#include "geocrystal/variables.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

#include "geocrystal/errors.hpp"

namespace geocrystal {
namespace {

bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char ch) { return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z'); };
  auto digit = [](char ch) { return ch >= '0' && ch <= '9'; };
  if (!alpha(s.front())) return false;
  for (char ch : s) {
    if (!alpha(ch) && !digit(ch)) return false;
  }
  return true;
}

struct Table {
  std::mutex mutex;
  std::deque<std::string> names;  // deque keeps references stable on growth
  std::unordered_map<std::string, std::uint32_t> index;

  Table() {
    for (int k = 0; k < 6; ++k) add("x" + std::to_string(k));
    for (int k = 0; k < 6; ++k) add("y" + std::to_string(k));
    add("c");
    add("d");
    add("t");
  }

  std::uint32_t add(const std::string& name) {
    auto id = static_cast<std::uint32_t>(names.size());
    names.push_back(name);
    index.emplace(name, id);
    return id;
  }
};

Table& table() {
  static Table t;
  return t;
}

}  // namespace

VarId VarRegistry::intern(std::string_view name) {
  if (!valid_identifier(name)) {
    throw Error(ErrorCode::kUnknownVariable, "invalid variable name '" + std::string(name) + "'");
  }
  Table& t = table();
  std::lock_guard lock(t.mutex);
  if (auto it = t.index.find(std::string(name)); it != t.index.end()) return VarId{it->second};
  return VarId{t.add(std::string(name))};
}

std::optional<VarId> VarRegistry::find(std::string_view name) {
  Table& t = table();
  std::lock_guard lock(t.mutex);
  if (auto it = t.index.find(std::string(name)); it != t.index.end()) return VarId{it->second};
  return std::nullopt;
}

const std::string& VarRegistry::name(VarId id) {
  Table& t = table();
  std::lock_guard lock(t.mutex);
  if (id.index >= t.names.size()) {
    throw Error(ErrorCode::kUnknownVariable, "no variable with index " + std::to_string(id.index));
  }
  return t.names[id.index];
}

std::size_t VarRegistry::size() {
  Table& t = table();
  std::lock_guard lock(t.mutex);
  return t.names.size();
}

namespace vars {

VarId x(int k) {
  if (k < 0 || k > 5) throw Error(ErrorCode::kUnknownVariable, "x index out of range");
  return VarId{static_cast<std::uint32_t>(k)};
}
VarId y(int k) {
  if (k < 0 || k > 5) throw Error(ErrorCode::kUnknownVariable, "y index out of range");
  return VarId{static_cast<std::uint32_t>(6 + k)};
}
VarId c() { return VarId{12}; }
VarId d() { return VarId{13}; }
VarId t() { return VarId{14}; }

}  // namespace vars
}  // namespace geocrystal
