#pragma once

#include <stdexcept>
#include <string>

namespace hypercris {

enum class ErrorKind {
  // input validation
  InvalidArgument,
  RingMismatch,
  EvenCharacteristic,
  EvenDegree,
  NotSeparableModP,
  NotMonic,
  TooLarge,
  InconsistentCounts,
  // arithmetic
  NotAUnit,
  NotDivisible,
  NonUnitConstantTerm,
  ExactQuotientFailure,
  // precision
  PrecisionExhausted,
  PrecisionInsufficientForLift,
  // invariants
  StrongDivisibilityViolation,
  NotInvertibleModP,
  DivisibilityViolation,
  NotACocycle,
  NotGlobalResidue,
  AxiomViolation,
  NonConvergence,
  FinalVerificationFailed,
};

const char* error_name(ErrorKind k);

enum class ErrorClass { Validation, Precision, Invariant };
ErrorClass error_class(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind k, const std::string& what) { throw Error(k, what); }

}  // namespace hypercris
