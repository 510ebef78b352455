#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semitrace {

enum class ErrorKind {
  EmptyGenerators,
  GcdNotOne,
  RingMismatch,
  NotContained,
  NotIntegral,
  NotMember,
  RegularRing,
  PreconditionFailed,
  ClosureViolation,
  ResourceLimit,
  AssertionFailure,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (and tests) can dispatch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace semitrace
