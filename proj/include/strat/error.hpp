#pragma once

#include <stdexcept>
#include <string>

namespace strat {

enum class ErrorCode {
  // input errors
  Syntax,
  Schema,
  UnknownVertex,
  UnknownArrow,
  DuplicateName,
  NonComposablePath,
  MixedRelationEndpoints,
  InvalidScalar,
  DimensionMismatch,
  AlgebraMismatch,
  InvalidModule,
  Precondition,
  // the input is well formed but fails the mathematical condition asked for
  CheckFailed,
  // capability errors
  NotFiniteDimensional,
  CapExceeded,
  NonSplitEndomorphismRing,
};

/// Stable lower-case identifier for an error code, used in JSON output.
const char *errorCodeName(ErrorCode code);

/// True for errors caused by the engine's limits rather than by bad input.
bool isCapabilityError(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace strat
