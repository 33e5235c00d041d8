#ifndef MIXMULT_ERRORS_HPP
#define MIXMULT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mixmult {

enum class ErrorKind {
    DimensionMismatch,
    NotMPrimary,
    LengthOverflow,
    StabilityFailure,
    GenericityFailure,
    HypothesisViolated,
    UnsupportedInput,
    NotSystemOfParameters,
    DegreeMismatch,
    FieldArtifact,
    ParseError,
    Internal,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace mixmult

#endif
