#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace geocrystal {

enum class ErrorCode {
  kDivisionByZeroFunction,
  kEvalDenominatorZero,
  kUnassignedVariable,
  kParseError,
  kUnknownVariable,
  kDegenerateDomain,
  kExponentOverflow,
  kUnknownIndex,
  kNonIntegerExponent,
  kZeroCoordinate,
  kZeroDenominatorInUpdate,
  kUnsupportedCartanPattern,
  kDomainExcluded,
  kNotCertifiedPositive,
  kZeroFunction,
  kConfigError,
  kIoError,
  kUnknownFormula,
  kChecksumMismatch,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failure raised by the library. The code is the
/// stable, machine-readable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax error in the expression grammar, with a 1-based source position and
/// the set of tokens that would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
             std::string found);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
  std::string found_;
};

/// True when the failure means "this sample point is outside the domain"
/// rather than a programming or configuration error.
bool is_domain_failure(const Error& e) noexcept;

}  // namespace geocrystal
