#include "geocrystal/formula_table.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "geocrystal/errors.hpp"
#include "geocrystal/parser.hpp"

namespace geocrystal {

std::uint64_t formula_checksum(std::string_view expression) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char ch : expression) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

constexpr std::string_view kChecksumTag = "fnv1a64=";

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct SplitLine {
  std::string_view name;
  std::string_view expression;
  std::size_t expression_column = 0;  // 1-based
  std::optional<std::string_view> comment;
};

// nullopt for blank and comment-only lines.
std::optional<SplitLine> split_definition(std::string_view line, std::size_t line_no, const std::string& source) {
  const std::string_view stripped = trim(line);
  if (stripped.empty() || stripped.front() == '#') return std::nullopt;
  const std::size_t assign = line.find(":=");
  if (assign == std::string_view::npos) {
    throw Error(ErrorCode::kConfigError, source + ":" + std::to_string(line_no) + ": expected NAME := expr");
  }
  SplitLine out;
  out.name = trim(line.substr(0, assign));
  std::string_view rest = line.substr(assign + 2);
  std::size_t offset = assign + 2;
  const std::size_t hash = rest.find('#');
  if (hash != std::string_view::npos) {
    out.comment = trim(rest.substr(hash + 1));
    rest = rest.substr(0, hash);
  }
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) {
    rest.remove_prefix(1);
    ++offset;
  }
  out.expression = trim(rest);
  out.expression_column = offset + 1;
  if (out.name.empty() || !std::isalpha(static_cast<unsigned char>(out.name.front()))) {
    throw Error(ErrorCode::kConfigError, source + ":" + std::to_string(line_no) + ": bad formula name");
  }
  for (char ch : out.name) {
    if (!std::isalnum(static_cast<unsigned char>(ch))) {
      throw Error(ErrorCode::kConfigError, source + ":" + std::to_string(line_no) + ": bad formula name");
    }
  }
  return out;
}

}  // namespace

FormulaTable FormulaTable::parse(std::string_view text, std::string source_name) {
  FormulaTable table;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    const auto def = split_definition(line, line_no, source_name);
    if (!def) continue;
    const std::string where = source_name + ":" + std::to_string(line_no);
    const std::string expected = hex64(formula_checksum(def->expression));
    if (!def->comment || def->comment->substr(0, kChecksumTag.size()) != kChecksumTag) {
      throw Error(ErrorCode::kChecksumMismatch, where + ": " + std::string(def->name) + " has no checksum");
    }
    const std::string_view given = trim(def->comment->substr(kChecksumTag.size()));
    if (given != expected) {
      throw Error(ErrorCode::kChecksumMismatch, where + ": checksum of " + std::string(def->name) + " is " +
                                                    expected + ", file says " + std::string(given));
    }
    if (table.values_.count(def->name)) {
      throw Error(ErrorCode::kConfigError, where + ": " + std::string(def->name) + " defined twice");
    }
    ParseOptions opt;
    opt.bindings = &table.values_;
    opt.first_line = line_no;
    opt.first_column = def->expression_column;
    RationalFunction value = parse_rf(def->expression, opt);
    table.values_.emplace(std::string(def->name), value);
    table.entries_.push_back({std::string(def->name), std::string(def->expression), std::move(value), line_no});
  }
  return table;
}

FormulaTable FormulaTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

const FormulaTable& FormulaTable::embedded() {
  static const FormulaTable table = parse(embedded_formula_text(), "formulas_d43.txt");
  return table;
}

bool FormulaTable::contains(std::string_view name) const { return values_.find(name) != values_.end(); }

const RationalFunction& FormulaTable::get(std::string_view name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw Error(ErrorCode::kUnknownFormula, "unknown formula '" + std::string(name) + "'");
  return it->second;
}

Polynomial FormulaTable::polynomial(std::string_view name) const {
  const RationalFunction& f = get(name);
  if (!f.is_polynomial()) throw Error(ErrorCode::kConfigError, std::string(name) + " is not a polynomial");
  return f.num().scaled(f.den().constant_value().inverse());
}

std::string FormulaTable::with_checksums(std::string_view text) {
  std::string out;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    const auto def = split_definition(line, line_no, "<input>");
    if (!def) {
      out += std::string(line) + "\n";
      continue;
    }
    out += std::string(def->name) + " := " + std::string(def->expression) + "  # " + std::string(kChecksumTag) +
           hex64(formula_checksum(def->expression)) + "\n";
  }
  return out;
}

const std::vector<std::string>& named_polynomial_names() {
  static const std::vector<std::string> names = {"P", "Q", "R", "S", "T", "U", "V",
                                                 "W", "D", "E", "F", "G", "H", "anum"};
  return names;
}

}  // namespace geocrystal
