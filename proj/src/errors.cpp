#include "mixmult/errors.hpp"

namespace mixmult {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotMPrimary: return "NotMPrimary";
        case ErrorKind::LengthOverflow: return "LengthOverflow";
        case ErrorKind::StabilityFailure: return "StabilityFailure";
        case ErrorKind::GenericityFailure: return "GenericityFailure";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::UnsupportedInput: return "UnsupportedInput";
        case ErrorKind::NotSystemOfParameters: return "NotSystemOfParameters";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::FieldArtifact: return "FieldArtifact";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Internal";
}

} // namespace mixmult
