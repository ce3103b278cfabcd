#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "geocrystal/rational_function.hpp"

namespace geocrystal {

struct ParseOptions {
  /// Identifiers resolved to previously defined expressions before variables.
  const std::map<std::string, RationalFunction, std::less<>>* bindings = nullptr;
  /// Register unseen identifiers as fresh variables instead of failing with
  /// UnknownVariable.
  bool allow_new_variables = false;
  /// Position of the first character of `text` in its enclosing source, so
  /// error locations refer to the source file.
  std::size_t first_line = 1;
  std::size_t first_column = 1;
};

/// Parses
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' ['-'] integer)?
///   base   := integer | identifier | '(' expr ')'
/// A rational literal p/q is the term p / q.
RationalFunction parse_rf(std::string_view text, const ParseOptions& options = {});

/// Canonical text in the same grammar; parse_rf(print_rf(f)) reproduces f.
inline std::string print_rf(const RationalFunction& f) { return f.to_string(); }

}  // namespace geocrystal
