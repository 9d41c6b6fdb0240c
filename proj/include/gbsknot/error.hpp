#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gbsknot {

enum class ErrorCode {
  ZeroLabel,
  Disconnected,
  Empty,
  DuplicateId,
  InvalidId,
  UnknownVertex,
  NotReduced,
  NotCollapsible,
  UnknownEdge,
  BadFactorization,
  TreeMismatch,
  EdgeInTree,
  UnknownGenerator,
  PreconditionFailed,
  Parse,
  StepBudgetExceeded,
};

std::string_view name(ErrorCode code);

/// Every failure raised by the library. `element()` names the offending
/// vertex, edge or generator when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string element = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& element() const noexcept { return element_; }

 private:
  ErrorCode code_;
  std::string element_;
};

/// Error with a 1-based source position inside a graph file or word.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, std::size_t column,
             std::string message, std::string element = {});

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace gbsknot
