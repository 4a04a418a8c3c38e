#include "fgcell/errors.hpp"

namespace fg {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MALFORMED_INPUT";
    case ErrorCode::CountMismatch: return "COUNT_MISMATCH";
    case ErrorCode::UngluedSlot: return "UNGLUED_SLOT";
    case ErrorCode::DuplicateSlot: return "DUPLICATE_SLOT";
    case ErrorCode::Disconnected: return "DISCONNECTED";
    case ErrorCode::PunctureMismatch: return "PUNCTURE_MISMATCH";
    case ErrorCode::UnknownEdge: return "UNKNOWN_EDGE";
    case ErrorCode::NotACellDecomposition: return "NOT_A_CELL_DECOMPOSITION";
    case ErrorCode::NonpositiveScale: return "NONPOSITIVE_SCALE";
    case ErrorCode::ExactBackendUnsupported: return "EXACT_BACKEND_UNSUPPORTED";
    case ErrorCode::FlipBudgetExceeded: return "FLIP_BUDGET_EXCEEDED";
    case ErrorCode::NotCanonical: return "NOT_CANONICAL";
    case ErrorCode::ChartMismatch: return "CHART_MISMATCH";
    case ErrorCode::NotInCell: return "NOT_IN_CELL";
    case ErrorCode::NonpositiveParameter: return "NONPOSITIVE_PARAMETER";
    case ErrorCode::MalformedPath: return "MALFORMED_PATH";
    case ErrorCode::SingularMatrix: return "SINGULAR_MATRIX";
    case ErrorCode::SingularSystem: return "SINGULAR_SYSTEM";
    case ErrorCode::ProjectionFailure: return "PROJECTION_FAILURE";
  }
  return "UNKNOWN";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput:
    case ErrorCode::CountMismatch:
    case ErrorCode::UngluedSlot:
    case ErrorCode::DuplicateSlot:
    case ErrorCode::Disconnected:
    case ErrorCode::PunctureMismatch:
    case ErrorCode::UnknownEdge:
    case ErrorCode::NotACellDecomposition:
    case ErrorCode::NonpositiveScale:
    case ErrorCode::ChartMismatch:
    case ErrorCode::NonpositiveParameter:
    case ErrorCode::MalformedPath:
    case ErrorCode::ExactBackendUnsupported:
      return true;
    default:
      return false;
  }
}

}  // namespace fg
