#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace houghton {

enum class ErrorCode {
  kZeroSumViolation,
  kNotBijective,
  kBadPoint,
  kSameRay,
  kEqualPoints,
  kRayOutOfRange,
  kRayCountMismatch,
  kNotFinitary,
  kOverflow,
  kParse,
  kTauOutsideH2,
  kBadRecord,
  kNeedThreeRays,
  kUnsupportedGeneratingSet,
  kWrongShape,
  kBudget,
  kTooLarge,
  kShrinking,
  kSizeMismatch,
  kBadP,
  kNotInUp,
  kTrivialPhi,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace houghton
