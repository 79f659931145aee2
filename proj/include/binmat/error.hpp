#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace binmat {

enum class ErrorCode {
  kDuplicateLabel,
  kLabelCountMismatch,
  kUnknownLabel,
  kMalformedInput,
  kTooLarge,
  kNotSimple,
  kNotApplicable,
  kEmptyGroundSet,
  kSumSize,
  kSumIntersection,
  kNotATriangle,
  kNotATriad,
  kStrictness,
  kNotExactSeparation,
  kSeparationSideTooSmall,
  kNotThreeConnected,
  kFanPrecondition,
  kUnknownName,
  kInvalidArgument,
};

/// Stable name used in CLI diagnostics, e.g. "UnknownLabel".
std::string_view error_name(ErrorCode code);

class MatroidError : public std::runtime_error {
 public:
  MatroidError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace binmat
