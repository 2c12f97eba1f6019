#include "pir/errors.hpp"

namespace pir {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::NotPrimePower: return "NotPrimePower";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::ConstructionFailed: return "ConstructionFailed";
        case ErrorKind::QEven: return "QEven";
        case ErrorKind::PartSizeOne: return "PartSizeOne";
        case ErrorKind::CrossIntersectionTooLarge: return "CrossIntersectionTooLarge";
        case ErrorKind::NotAPartition: return "NotAPartition";
        case ErrorKind::FactorTooSmall: return "FactorTooSmall";
        case ErrorKind::NoFactorization: return "NoFactorization";
        case ErrorKind::KTooLarge: return "KTooLarge";
        case ErrorKind::HOutOfRange: return "HOutOfRange";
        case ErrorKind::NotConstructedAtDeskScale: return "NotConstructedAtDeskScale";
        case ErrorKind::ParametersInadmissible: return "ParametersInadmissible";
        case ErrorKind::NoValidPencilLine: return "NoValidPencilLine";
        case ErrorKind::SingletonTrace: return "SingletonTrace";
        case ErrorKind::NoParameterFound: return "NoParameterFound";
        case ErrorKind::RepeatedDifference: return "RepeatedDifference";
        case ErrorKind::NotAConfiguration: return "NotAConfiguration";
        case ErrorKind::NotHomogeneous: return "NotHomogeneous";
        case ErrorKind::IntersectionViolation: return "IntersectionViolation";
        case ErrorKind::EmptySubset: return "EmptySubset";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::ResourceGuard: return "ResourceGuard";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

} // namespace pir
