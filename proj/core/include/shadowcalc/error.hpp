#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shadowcalc {

enum class ErrorCode {
  kDegenerateInput,
  kDimensionOutOfRange,
  kDimensionMismatch,
  kIllConditionedGrid,
  kKindDimensionMismatch,
  kMissingSeed,
  kNonFiniteSample,
  kZeroDirection,
  kInvalidArgument,
  kParseError,
  kInternal,
};

/// Stable snake_case name, used as the machine-readable "error" field.
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

}  // namespace shadowcalc
