#include "poincare/error.hpp"

namespace poincare {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroBase: return "ZeroBase";
    case ErrorCode::PoleAtEvaluationPoint: return "PoleAtEvaluationPoint";
    case ErrorCode::NonzeroInnerConstantTerm: return "NonzeroInnerConstantTerm";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotDivisibleByXn: return "NotDivisibleByXn";
    case ErrorCode::ZeroAtNegativeExponent: return "ZeroAtNegativeExponent";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::RootOfUnityBase: return "RootOfUnityBase";
    case ErrorCode::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::RootOfUnityDivisor: return "RootOfUnityDivisor";
    case ErrorCode::NotTangentToIdentity: return "NotTangentToIdentity";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

}  // namespace poincare
