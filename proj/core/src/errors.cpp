#include "geocrystal/errors.hpp"

#include <sstream>

namespace geocrystal {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZeroFunction: return "DivisionByZeroFunction";
    case ErrorCode::kEvalDenominatorZero: return "EvalDenominatorZero";
    case ErrorCode::kUnassignedVariable: return "UnassignedVariable";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownVariable: return "UnknownVariable";
    case ErrorCode::kDegenerateDomain: return "DegenerateDomain";
    case ErrorCode::kExponentOverflow: return "ExponentOverflow";
    case ErrorCode::kUnknownIndex: return "UnknownIndex";
    case ErrorCode::kNonIntegerExponent: return "NonIntegerExponent";
    case ErrorCode::kZeroCoordinate: return "ZeroCoordinate";
    case ErrorCode::kZeroDenominatorInUpdate: return "ZeroDenominatorInUpdate";
    case ErrorCode::kUnsupportedCartanPattern: return "UnsupportedCartanPattern";
    case ErrorCode::kDomainExcluded: return "DomainExcluded";
    case ErrorCode::kNotCertifiedPositive: return "NotCertifiedPositive";
    case ErrorCode::kZeroFunction: return "ZeroFunction";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kUnknownFormula: return "UnknownFormula";
    case ErrorCode::kChecksumMismatch: return "ChecksumMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

namespace {

std::string describe_parse_error(std::size_t line, std::size_t column,
                                 const std::vector<std::string>& expected,
                                 const std::string& found) {
  std::ostringstream os;
  os << "line " << line << ", column " << column << ": expected ";
  if (expected.size() > 1) os << "one of ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) os << ", ";
    os << expected[i];
  }
  os << ", found " << found;
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                       std::string found)
    : Error(ErrorCode::kParseError, describe_parse_error(line, column, expected, found)),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

bool is_domain_failure(const Error& e) noexcept {
  switch (e.code()) {
    case ErrorCode::kDivisionByZeroFunction:
    case ErrorCode::kEvalDenominatorZero:
    case ErrorCode::kDomainExcluded:
    case ErrorCode::kZeroDenominatorInUpdate:
    case ErrorCode::kZeroCoordinate:
      return true;
    default:
      return false;
  }
}

}  // namespace geocrystal
