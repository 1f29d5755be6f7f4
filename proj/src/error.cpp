#include "blakley/error.hpp"

namespace blakley {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::MixedParams: return "MixedParams";
    case ErrorCode::DuplicateShareIndex: return "DuplicateShareIndex";
    case ErrorCode::WrongShareCount: return "WrongShareCount";
    case ErrorCode::SingularShares: return "SingularShares";
    case ErrorCode::AdmissibilityExhausted: return "AdmissibilityExhausted";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::SharesNotBelowThreshold: return "SharesNotBelowThreshold";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::MalformedField: return "MalformedField";
    case ErrorCode::RangeViolation: return "RangeViolation";
  }
  return "Unknown";
}

}  // namespace blakley
