#include "corings/error.hpp"

namespace corings {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidField: return "InvalidField";
    case ErrorKind::kFieldMismatch: return "FieldMismatch";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kAlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::kIllDefinedAction: return "IllDefinedAction";
    case ErrorKind::kDescentFailure: return "DescentFailure";
    case ErrorKind::kObjectMismatch: return "ObjectMismatch";
    case ErrorKind::kIsoFailure: return "IsoFailure";
    case ErrorKind::kInvalidMorphism: return "InvalidMorphism";
    case ErrorKind::kNotInjective: return "NotInjective";
    case ErrorKind::kNotABimodule: return "NotABimodule";
    case ErrorKind::kDeltaNotRightLinear: return "DeltaNotRightLinear";
    case ErrorKind::kNotACoaction: return "NotACoaction";
    case ErrorKind::kNotColinear: return "NotColinear";
    case ErrorKind::kPrecondition: return "PreconditionFailed";
    case ErrorKind::kSyntax: return "SyntaxError";
    case ErrorKind::kUnknownReference: return "UnknownReference";
    case ErrorKind::kValidationFailure: return "ValidationFailure";
  }
  return "Unknown";
}

}  // namespace corings
