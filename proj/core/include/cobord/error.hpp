#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cobord {

/// Failure categories raised by the library. The CLI maps these onto exit codes.
enum class ErrorCode {
  NotDivisible,
  ZeroWeight,
  BadParameters,
  BadSpace,
  SingularPoint,
  VanishingViolation,
  IntegralityViolation,
  BadOmega,
  TooFewVariables,
  NonIntegralSolution,
  SingularMatrix,
  TooManyParts,
  OutOfRange,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for errors that mean "the input data cannot come from a stably complex
/// torus manifold", as opposed to malformed input or internal failures.
bool is_constraint_violation(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cobord
