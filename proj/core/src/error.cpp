#include "cobord/error.hpp"

namespace cobord {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::BadSpace: return "BadSpace";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::VanishingViolation: return "VanishingViolation";
    case ErrorCode::IntegralityViolation: return "IntegralityViolation";
    case ErrorCode::BadOmega: return "BadOmega";
    case ErrorCode::TooFewVariables: return "TooFewVariables";
    case ErrorCode::NonIntegralSolution: return "NonIntegralSolution";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::TooManyParts: return "TooManyParts";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_constraint_violation(ErrorCode code) noexcept {
  return code == ErrorCode::VanishingViolation || code == ErrorCode::IntegralityViolation ||
         code == ErrorCode::NonIntegralSolution;
}

}  // namespace cobord
