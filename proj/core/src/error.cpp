#include "shadowcalc/error.hpp"

namespace shadowcalc {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDegenerateInput: return "degenerate_input";
    case ErrorCode::kDimensionOutOfRange: return "dimension_out_of_range";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kIllConditionedGrid: return "ill_conditioned_grid";
    case ErrorCode::kKindDimensionMismatch: return "kind_dimension_mismatch";
    case ErrorCode::kMissingSeed: return "missing_seed";
    case ErrorCode::kNonFiniteSample: return "non_finite_sample";
    case ErrorCode::kZeroDirection: return "zero_direction";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kParseError: return "parse_error";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace shadowcalc
