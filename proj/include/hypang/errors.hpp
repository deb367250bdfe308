#pragma once

#include <stdexcept>
#include <string>

namespace hypang
{

/// Failure categories raised by the library. The CLI maps these onto exit codes.
enum class ErrorCode {
    MalformedInput,
    TriangleInequalityViolated,
    NotRealizable,
    AngleSumNotHyperbolic,
    GenusMismatch,
    GenusTooSmall,
    FanNotInterior,
    ParameterDomainError,
    ImageConsistencyError,
    NoBracket,
    HingeNoBracket,
    ClosureFailure,
    NotHyperelliptic,
    MidpointMismatch,
    DegenerateSide,
    ModelMismatch,
};

inline const char* to_string(ErrorCode code)
{
    switch (code) {
        case ErrorCode::MalformedInput: return "MalformedInput";
        case ErrorCode::TriangleInequalityViolated: return "TriangleInequalityViolated";
        case ErrorCode::NotRealizable: return "NotRealizable";
        case ErrorCode::AngleSumNotHyperbolic: return "AngleSumNotHyperbolic";
        case ErrorCode::GenusMismatch: return "GenusMismatch";
        case ErrorCode::GenusTooSmall: return "GenusTooSmall";
        case ErrorCode::FanNotInterior: return "FanNotInterior";
        case ErrorCode::ParameterDomainError: return "ParameterDomainError";
        case ErrorCode::ImageConsistencyError: return "ImageConsistencyError";
        case ErrorCode::NoBracket: return "NoBracket";
        case ErrorCode::HingeNoBracket: return "HingeNoBracket";
        case ErrorCode::ClosureFailure: return "ClosureFailure";
        case ErrorCode::NotHyperelliptic: return "NotHyperelliptic";
        case ErrorCode::MidpointMismatch: return "MidpointMismatch";
        case ErrorCode::DegenerateSide: return "DegenerateSide";
        case ErrorCode::ModelMismatch: return "ModelMismatch";
    }
    return "Unknown";
}

/** @brief Library exception carrying an ErrorCode */
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_{code}
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace hypang
