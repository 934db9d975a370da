#include "strat/error.hpp"

namespace strat {

const char *errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "syntax_error";
    case ErrorCode::Schema: return "schema_error";
    case ErrorCode::UnknownVertex: return "unknown_vertex";
    case ErrorCode::UnknownArrow: return "unknown_arrow";
    case ErrorCode::DuplicateName: return "duplicate_name";
    case ErrorCode::NonComposablePath: return "non_composable_path";
    case ErrorCode::MixedRelationEndpoints: return "mixed_relation_endpoints";
    case ErrorCode::InvalidScalar: return "invalid_scalar";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::AlgebraMismatch: return "algebra_mismatch";
    case ErrorCode::InvalidModule: return "invalid_module";
    case ErrorCode::Precondition: return "precondition_failed";
    case ErrorCode::CheckFailed: return "check_failed";
    case ErrorCode::NotFiniteDimensional: return "not_finite_dimensional";
    case ErrorCode::CapExceeded: return "cap_exceeded";
    case ErrorCode::NonSplitEndomorphismRing: return "non_split_endomorphism_ring";
  }
  return "unknown";
}

bool isCapabilityError(ErrorCode code) {
  return code == ErrorCode::NotFiniteDimensional || code == ErrorCode::CapExceeded ||
         code == ErrorCode::NonSplitEndomorphismRing;
}

}  // namespace strat
