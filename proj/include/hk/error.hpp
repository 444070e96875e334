#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hk {

enum class ErrorCode {
  kParseError,
  kInvalidArgument,
  kUnbounded,
  kEmpty,
  kDegenerate,
  kNonIntegralVertex,
  kNegativeScale,
  kDimMismatch,
  kFacetParallelToBase,
  kUnsupportedDimension,
  kInterpolationMismatch,
  kBreakpointVerificationFailed,
};

// Stable machine-readable name, e.g. "unbounded".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hk
