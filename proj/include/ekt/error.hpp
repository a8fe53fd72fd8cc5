#pragma once

#include <stdexcept>
#include <string>

namespace ekt {

enum class ErrorCode {
  ClosureOverflow,
  InvalidPermutation,
  NotNormal,
  NotSubgroup,
  CapExceeded,
  GroupMismatch,
  SplitFailure,
  NumericalDegeneracy,
  SnapFailure,
  NonScalar,
  NotStabilized,
  InvalidCocycle,
  NotATrivial,
  NotPrime,
  NotOdd,
  ParseError,
  InvalidArgument,
  Inconsistent,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ekt
