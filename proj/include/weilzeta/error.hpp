#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weilzeta {

enum class ErrorKind {
  NotPrime,
  UnsupportedField,
  MixedFields,
  DivisionByZero,
  MalformedSpec,
  BudgetExceeded,
  InsufficientCounts,
  NoRationalFit,
  NonIntegralCoefficients,
  NonIntegralCount,
  WeightSeparationFailed,
  RoundingMismatch,
  DualityViolation,
  DegenerateQ,
  DimensionMismatch,
  FieldMismatch,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it onto a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

}  // namespace weilzeta
