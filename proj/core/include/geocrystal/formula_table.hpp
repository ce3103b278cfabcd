#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geocrystal/rational_function.hpp"

namespace geocrystal {

/// Contents of the formula data file compiled into the library.
std::string_view embedded_formula_text();

/// FNV-1a 64 of the text with all whitespace removed.
std::uint64_t formula_checksum(std::string_view expression);

struct FormulaEntry {
  std::string name;
  std::string expression;  // as written in the source
  RationalFunction value;
  std::size_t line = 0;
};

/// Named formulas parsed from "NAME := expr   # fnv1a64=<16 hex digits>"
/// lines. Blank lines and lines starting with '#' are ignored. A definition may
/// use the names defined above it. A missing or wrong checksum raises
/// ChecksumMismatch.
class FormulaTable {
 public:
  static FormulaTable parse(std::string_view text, std::string source_name = "<formulas>");
  static FormulaTable load_file(const std::string& path);  // IoError
  /// Table parsed once from the embedded data.
  static const FormulaTable& embedded();

  bool contains(std::string_view name) const;
  const RationalFunction& get(std::string_view name) const;  // UnknownFormula
  /// The named formula as a polynomial; ConfigError if it is not one.
  Polynomial polynomial(std::string_view name) const;
  const std::vector<FormulaEntry>& entries() const noexcept { return entries_; }

  /// Re-emits `text` with each definition's checksum comment recomputed.
  static std::string with_checksums(std::string_view text);

 private:
  std::vector<FormulaEntry> entries_;
  std::map<std::string, RationalFunction, std::less<>> values_;
};

/// Names of the transcribed polynomials whose coefficients must all be
/// positive: P Q R S T U V W D E F G H anum.
const std::vector<std::string>& named_polynomial_names();

}  // namespace geocrystal
