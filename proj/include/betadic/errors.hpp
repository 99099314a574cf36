#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace betadic {

// Mathematical precondition failures. Each kind has a stable name that the
// CLI reports in its JSON diagnostics.
enum class ErrorKind {
  InvalidArgument,
  NotMonic,
  Reducible,
  IrreducibilityUndecided,
  RingMismatch,
  ZeroElement,
  NotDivisible,
  NotPrime,
  NonMonogenicPrime,
  UnitOrZero,
  NotAUnit,
  NotPrincipalUnit,
  PrecisionExhausted,
  FactoringFailed,
  RootOfUnity,
  PatternNotFound,
  NormTooSmall,
  IncompleteDigitSet,
  NotCoprime,
  WorkBudgetExceeded,
  RecursionInvalid,
  BadDigit,
  BoundViolated,
};

std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string payload = {})
      : std::runtime_error(std::string(error_name(kind)) + ": " + message),
        kind_(kind),
        payload_(std::move(payload)) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }
  // Extra diagnostic data (e.g. a reducibility witness or a kernel
  // sequence), serialized as a JSON fragment or plain text.
  const std::string& payload() const noexcept { return payload_; }

 private:
  ErrorKind kind_;
  std::string payload_;
};

}  // namespace betadic
