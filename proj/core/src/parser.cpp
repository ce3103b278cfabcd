#include "geocrystal/parser.hpp"

#include <cctype>

#include "parser_impl.hpp"

namespace geocrystal {
namespace detail {

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::kEnd: return "end of input";
    case Tok::kInteger: return "integer '" + t.text + "'";
    case Tok::kIdent: return "identifier '" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> tokenize(std::string_view text, const ParseOptions& opt) {
  std::vector<Token> out;
  std::size_t line = opt.first_line;
  std::size_t column = opt.first_column;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    const std::size_t l = line;
    const std::size_t c = column;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::kInteger, std::string(text.substr(i, j - i)), l, c});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::kIdent, std::string(text.substr(i, j - i)), l, c});
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (ch) {
      case '+': kind = Tok::kPlus; break;
      case '-': kind = Tok::kMinus; break;
      case '*': kind = Tok::kStar; break;
      case '/': kind = Tok::kSlash; break;
      case '^': kind = Tok::kCaret; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      default:
        throw ParseError(l, c, {"integer", "identifier", "'('"}, "character '" + std::string(1, ch) + "'");
    }
    out.push_back({kind, std::string(1, ch), l, c});
    advance(1);
  }
  out.push_back({Tok::kEnd, "", line, column});
  return out;
}

std::string position(const Token& t) {
  return "line " + std::to_string(t.line) + ", column " + std::to_string(t.column);
}

}  // namespace detail

namespace {

using detail::Token;

struct RationalBuilder {
  using Value = RationalFunction;
  const ParseOptions& opt;

  Value integer(const Token& t) { return RationalFunction(Rational(mpz_class(t.text))); }

  Value identifier(const Token& t) {
    if (opt.bindings) {
      auto it = opt.bindings->find(t.text);
      if (it != opt.bindings->end()) return it->second;
    }
    if (auto v = VarRegistry::find(t.text)) return RationalFunction::variable(*v);
    if (opt.allow_new_variables) return RationalFunction::variable(VarRegistry::intern(t.text));
    throw Error(ErrorCode::kUnknownVariable, detail::position(t) + ": unknown variable '" + t.text + "'");
  }

  Value negate(Value v, const Token&) { return -v; }
  Value add(Value a, Value b, const Token&) { return a + b; }
  Value sub(Value a, Value b, const Token&) { return a - b; }
  Value mul(Value a, Value b, const Token&) { return a * b; }

  Value div(Value a, Value b, const Token& at) {
    if (b.is_zero()) throw Error(ErrorCode::kDivisionByZeroFunction, detail::position(at) + ": division by zero");
    return a / b;
  }

  Value pow(Value v, std::int64_t e, const Token& at) {
    if (e < 0 && v.is_zero()) {
      throw Error(ErrorCode::kDivisionByZeroFunction, detail::position(at) + ": negative power of zero");
    }
    return v.pow(e);
  }
};

}  // namespace

RationalFunction parse_rf(std::string_view text, const ParseOptions& options) {
  RationalBuilder builder{options};
  return detail::GrammarParser<RationalBuilder>(detail::tokenize(text, options), builder).parse();
}

}  // namespace geocrystal
