#pragma once

#include <stdexcept>
#include <string>

namespace disclqg {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  NotStabilizable,
  NotDetectable,
  NotHurwitz,
  NoStabilizingSolution,
  IndefiniteEffectiveNoise,
  NotDiscountedStable,
  AlphaNotNegative,
  NonFiniteState,
  InternalConsistency,
};

/// All library failures are reported through this exception type; code()
/// identifies the failure class so callers can map it to exit codes or retry.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

}  // namespace disclqg
