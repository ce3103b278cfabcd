#pragma once

// Grammar driver shared by the rational-function parser and the max-plus
// evaluator: both walk the same syntax with different value types.

#include <cstdint>
#include <string>
#include <vector>

#include "geocrystal/errors.hpp"
#include "geocrystal/parser.hpp"

namespace geocrystal::detail {

enum class Tok { kInteger, kIdent, kPlus, kMinus, kStar, kSlash, kCaret, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text, const ParseOptions& opt);
std::string describe(const Token& t);
std::string position(const Token& t);  // "line L, column C"

/// Builder provides Value and
///   integer(tok), identifier(tok), negate(v, op), add(a, b, op), sub(a, b, op),
///   mul(a, b, op), div(a, b, divisor_tok), pow(v, exponent, tok).
template <class Builder>
class GrammarParser {
 public:
  using Value = typename Builder::Value;

  GrammarParser(std::vector<Token> tokens, Builder& builder) : tokens_(std::move(tokens)), b_(builder) {}

  Value parse() {
    Value v = expr();
    if (peek().kind != Tok::kEnd) fail({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
    return v;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column, std::move(expected), describe(t));
  }

  Value expr() {
    const Token* minus = nullptr;
    if (peek().kind == Tok::kMinus) minus = &take();
    Value acc = term();
    if (minus) acc = b_.negate(std::move(acc), *minus);
    for (;;) {
      const Token& op = peek();
      if (op.kind == Tok::kPlus) {
        take();
        acc = b_.add(std::move(acc), term(), op);
      } else if (op.kind == Tok::kMinus) {
        take();
        acc = b_.sub(std::move(acc), term(), op);
      } else {
        return acc;
      }
    }
  }

  Value term() {
    Value acc = factor();
    for (;;) {
      const Token& op = peek();
      if (op.kind == Tok::kStar) {
        take();
        acc = b_.mul(std::move(acc), factor(), op);
      } else if (op.kind == Tok::kSlash) {
        take();
        const Token& at = peek();
        acc = b_.div(std::move(acc), factor(), at);
      } else {
        return acc;
      }
    }
  }

  Value factor() {
    Value v = base();
    if (peek().kind != Tok::kCaret) return v;
    take();
    bool negative = false;
    if (peek().kind == Tok::kMinus) {
      take();
      negative = true;
    }
    if (peek().kind != Tok::kInteger) fail({"integer"});
    const Token& t = take();
    if (t.text.size() > 9) throw Error(ErrorCode::kExponentOverflow, position(t) + ": exponent " + t.text + " is too large");
    const std::int64_t e = std::stoll(t.text);
    return b_.pow(std::move(v), negative ? -e : e, t);
  }

  Value base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kInteger:
        take();
        return b_.integer(t);
      case Tok::kIdent:
        take();
        return b_.identifier(t);
      case Tok::kLParen: {
        take();
        Value inner = expr();
        if (peek().kind != Tok::kRParen) fail({"')'", "'+'", "'-'", "'*'", "'/'", "'^'"});
        take();
        return inner;
      }
      default:
        fail({"integer", "identifier", "'('"});
    }
  }

  std::vector<Token> tokens_;
  Builder& b_;
  std::size_t pos_ = 0;
};

}  // namespace geocrystal::detail
