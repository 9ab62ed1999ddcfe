#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cookie {

enum class ErrorCode {
  ParseError,
  // system validation
  InvalidInterval,
  OverlappingIntervals,
  NotExpanding,
  NonMonotone,
  TooFewBranches,
  // evaluation
  OutsideDomain,
  BadWeights,
  InvalidArgument,
  NotAffine,
  PowerIterationDiverged,
  NonFiniteValue,
  MaxIterationsExceeded,
  NoRootBracket,
  AlphaOutOfRange,
  DegeneratePressure,
};

std::string_view error_name(ErrorCode code) noexcept;

/// True for the codes produced by system validation.
bool is_validation_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cookie
