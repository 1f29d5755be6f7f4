#ifndef BLAKLEY_ERROR_HPP
#define BLAKLEY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace blakley {

enum class ErrorCode {
  // field
  ModulusMismatch,
  ZeroInverse,
  NonPrimeModulus,
  // modlinalg
  NotSquare,
  SingularMatrix,
  DimensionMismatch,
  // scheme
  InvalidParams,
  MixedParams,
  DuplicateShareIndex,
  WrongShareCount,
  SingularShares,
  AdmissibilityExhausted,
  // analysis
  EnumerationTooLarge,
  SharesNotBelowThreshold,
  // share_io
  BadMagic,
  MalformedField,
  RangeViolation,
};

const char* to_string(ErrorCode code) noexcept;

/// The single exception type thrown by the library. `code()` identifies the
/// failure class; `what()` carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace blakley

#endif  // BLAKLEY_ERROR_HPP
