#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qscatter {

enum class ErrorCode {
    InvalidArgument,
    DimensionMismatch,
    SingularMatrix,
    NonFinite,
    NonPositiveMomentum,
    AtPole,
    NoConvergence,
    DerivativeVanished,
    NoSignChange,
    EqualMomenta,
    SingularReflection,
    ZeroNorm,
    Undefined,
    BelowThreshold,
    EmptySector,
};

std::string_view error_name(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto a stable exit status and a named message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace qscatter
