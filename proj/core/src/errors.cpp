#include "plqo/errors.hpp"

#include <sstream>

namespace plqo {

const char* error_tag(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "PARSE";
    case ErrorCode::MissingSymbol: return "MISSING_SYMBOL";
    case ErrorCode::BudgetExceeded: return "BUDGET";
    case ErrorCode::UNotSubset: return "U_NOT_SUBSET";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::UnsupportedNonlinear: return "UNSUPPORTED_NONLINEAR";
    case ErrorCode::DimMismatch: return "DIM_MISMATCH";
    case ErrorCode::IncompatibleFamily: return "INCOMPATIBLE_FAMILY";
    case ErrorCode::InvalidStructure: return "INVALID_STRUCTURE";
    case ErrorCode::SpecInvalid: return "SPEC_INVALID";
    case ErrorCode::WitnessIncomplete: return "WITNESS_INCOMPLETE";
    case ErrorCode::SchemaPreconditionFailed: return "SCHEMA_PRECONDITION";
    case ErrorCode::Io: return "IO";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

namespace {

std::string describe(std::size_t line, std::size_t column,
                     const std::vector<std::string>& expected, const std::string& found) {
  std::ostringstream os;
  os << line << ":" << column << ": unexpected " << found;
  if (!expected.empty()) {
    os << ", expected one of:";
    for (const auto& e : expected) os << " " << e;
  }
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                       const std::string& found)
    : Error(ErrorCode::Parse, describe(line, column, expected, found)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

}  // namespace plqo
