#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace corings {

enum class ErrorKind {
  kInvalidField,
  kFieldMismatch,
  kDimensionMismatch,
  kAlgebraMismatch,
  kIllDefinedAction,
  kDescentFailure,
  kObjectMismatch,
  kIsoFailure,
  kInvalidMorphism,
  kNotInjective,
  kNotABimodule,
  kDeltaNotRightLinear,
  kNotACoaction,
  kNotColinear,
  kPrecondition,
  kSyntax,
  kUnknownReference,
  kValidationFailure,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. Mathematical check outcomes are
/// reported through Verdict instead; an Error means an operation could not
/// produce its result.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        detail_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace corings
