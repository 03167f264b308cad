#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecrep {

enum class ErrorKind {
  PrecisionTooLow,
  InvalidModulus,
  UnsupportedArgument,
  DomainError,
  TruncationFailure,
  SingularCurve,
  PrecisionExceeded,
  AdmissibilityError,
  BranchError,
  BudgetExceeded,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this one exception type; the
/// kind is the stable, machine-checkable part and the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ecrep
