#include "betadic/errors.hpp"

namespace betadic {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::IrreducibilityUndecided: return "IrreducibilityUndecided";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NonMonogenicPrime: return "NonMonogenicPrime";
    case ErrorKind::UnitOrZero: return "UnitOrZero";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NotPrincipalUnit: return "NotPrincipalUnit";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::FactoringFailed: return "FactoringFailed";
    case ErrorKind::RootOfUnity: return "RootOfUnity";
    case ErrorKind::PatternNotFound: return "PatternNotFound";
    case ErrorKind::NormTooSmall: return "NormTooSmall";
    case ErrorKind::IncompleteDigitSet: return "IncompleteDigitSet";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::WorkBudgetExceeded: return "WorkBudgetExceeded";
    case ErrorKind::RecursionInvalid: return "RecursionInvalid";
    case ErrorKind::BadDigit: return "BadDigit";
    case ErrorKind::BoundViolated: return "BoundViolated";
  }
  return "Unknown";
}

}  // namespace betadic
