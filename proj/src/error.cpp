#include "qscatter/error.hpp"

namespace qscatter {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::NonPositiveMomentum: return "NonPositiveMomentum";
        case ErrorCode::AtPole: return "AtPole";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::DerivativeVanished: return "DerivativeVanished";
        case ErrorCode::NoSignChange: return "NoSignChange";
        case ErrorCode::EqualMomenta: return "EqualMomenta";
        case ErrorCode::SingularReflection: return "SingularReflection";
        case ErrorCode::ZeroNorm: return "ZeroNorm";
        case ErrorCode::Undefined: return "Undefined";
        case ErrorCode::BelowThreshold: return "BelowThreshold";
        case ErrorCode::EmptySector: return "EmptySector";
    }
    return "Unknown";
}

}  // namespace qscatter
