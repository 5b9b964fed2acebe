#include "hypercris/error.hpp"

namespace hypercris {

const char* error_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::EvenDegree: return "EvenDegree";
    case ErrorKind::NotSeparableModP: return "NotSeparableModP";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InconsistentCounts: return "InconsistentCounts";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorKind::ExactQuotientFailure: return "ExactQuotientFailure";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::PrecisionInsufficientForLift: return "PrecisionInsufficientForLift";
    case ErrorKind::StrongDivisibilityViolation: return "StrongDivisibilityViolation";
    case ErrorKind::NotInvertibleModP: return "NotInvertibleModP";
    case ErrorKind::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::NotGlobalResidue: return "NotGlobalResidue";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::FinalVerificationFailed: return "FinalVerificationFailed";
  }
  return "UnknownError";
}

ErrorClass error_class(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::RingMismatch:
    case ErrorKind::EvenCharacteristic:
    case ErrorKind::EvenDegree:
    case ErrorKind::NotSeparableModP:
    case ErrorKind::NotMonic:
    case ErrorKind::TooLarge:
    case ErrorKind::InconsistentCounts:
    case ErrorKind::NotAUnit:
    case ErrorKind::NotDivisible:
    case ErrorKind::NonUnitConstantTerm:
      return ErrorClass::Validation;
    case ErrorKind::PrecisionExhausted:
    case ErrorKind::PrecisionInsufficientForLift:
      return ErrorClass::Precision;
    default:
      return ErrorClass::Invariant;
  }
}

}  // namespace hypercris
