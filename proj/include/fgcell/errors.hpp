#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fg {

enum class ErrorCode {
  MalformedInput,
  CountMismatch,
  UngluedSlot,
  DuplicateSlot,
  Disconnected,
  PunctureMismatch,
  UnknownEdge,
  NotACellDecomposition,
  NonpositiveScale,
  ExactBackendUnsupported,
  FlipBudgetExceeded,
  NotCanonical,
  ChartMismatch,
  NotInCell,
  NonpositiveParameter,
  MalformedPath,
  SingularMatrix,
  SingularSystem,
  ProjectionFailure,
};

std::string_view error_name(ErrorCode code);

// Validation errors are problems with the input; the rest are failures of a
// computation on otherwise well-formed input.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fg
