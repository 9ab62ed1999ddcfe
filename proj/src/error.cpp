#include "cookie/error.hpp"

namespace cookie {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::OverlappingIntervals: return "OverlappingIntervals";
    case ErrorCode::NotExpanding: return "NotExpanding";
    case ErrorCode::NonMonotone: return "NonMonotone";
    case ErrorCode::TooFewBranches: return "TooFewBranches";
    case ErrorCode::OutsideDomain: return "OutsideDomain";
    case ErrorCode::BadWeights: return "BadWeights";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotAffine: return "NotAffine";
    case ErrorCode::PowerIterationDiverged: return "PowerIterationDiverged";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::MaxIterationsExceeded: return "MaxIterationsExceeded";
    case ErrorCode::NoRootBracket: return "NoRootBracket";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::DegeneratePressure: return "DegeneratePressure";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInterval:
    case ErrorCode::OverlappingIntervals:
    case ErrorCode::NotExpanding:
    case ErrorCode::NonMonotone:
    case ErrorCode::TooFewBranches:
      return true;
    default:
      return false;
  }
}

}  // namespace cookie
