#pragma once

#include <stdexcept>
#include <string>

namespace pir {

// Every domain error carries a machine-checkable kind next to the message so
// callers (and the CLI exit-code mapping) never have to parse strings.
enum class ErrorKind {
    InvalidParameter,
    NotPrimePower,
    DivisionByZero,
    ConstructionFailed,
    QEven,
    PartSizeOne,
    CrossIntersectionTooLarge,
    NotAPartition,
    FactorTooSmall,
    NoFactorization,
    KTooLarge,
    HOutOfRange,
    NotConstructedAtDeskScale,
    ParametersInadmissible,
    NoValidPencilLine,
    SingletonTrace,
    NoParameterFound,
    RepeatedDifference,
    NotAConfiguration,
    NotHomogeneous,
    IntersectionViolation,
    EmptySubset,
    DimensionMismatch,
    ResourceGuard,
    ParseError,
    VerificationFailed,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

const char* error_kind_name(ErrorKind kind);

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace pir
