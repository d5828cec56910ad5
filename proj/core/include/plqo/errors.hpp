#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace plqo {

enum class ErrorCode {
  Parse,
  MissingSymbol,
  BudgetExceeded,
  UNotSubset,
  DivisionByZero,
  UnsupportedNonlinear,
  DimMismatch,
  IncompatibleFamily,
  InvalidStructure,
  SpecInvalid,
  WitnessIncomplete,
  SchemaPreconditionFailed,
  Io,
  Internal,
};

/// Machine-readable tag used in `error[CODE]:` diagnostics.
const char* error_tag(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
             const std::string& found);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

}  // namespace plqo
