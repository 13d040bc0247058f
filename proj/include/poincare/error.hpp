#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace poincare {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  ZeroBase,
  PoleAtEvaluationPoint,
  NonzeroInnerConstantTerm,
  NotInvertible,
  NotDivisibleByXn,
  ZeroAtNegativeExponent,
  ZeroPolynomial,
  RootOfUnityBase,
  PrecisionTooLow,
  OrderMismatch,
  InvalidInstance,
  RootOfUnityDivisor,
  NotTangentToIdentity,
  InvalidArgument,
  ParseError,
  InternalInvariant,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace poincare
