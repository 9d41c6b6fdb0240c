#include "gbsknot/error.hpp"

#include <utility>

namespace gbsknot {

std::string_view name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroLabel: return "ZeroLabel";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::InvalidId: return "InvalidId";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NotCollapsible: return "NotCollapsible";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::BadFactorization: return "BadFactorization";
    case ErrorCode::TreeMismatch: return "TreeMismatch";
    case ErrorCode::EdgeInTree: return "EdgeInTree";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::StepBudgetExceeded: return "StepBudgetExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::string element)
    : std::runtime_error(std::move(message)),
      code_(code),
      element_(std::move(element)) {}

ParseError::ParseError(ErrorCode code, std::size_t line, std::size_t column,
                       std::string message, std::string element)
    : Error(code,
            "line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + message,
            std::move(element)),
      line_(line),
      column_(column) {}

}  // namespace gbsknot
