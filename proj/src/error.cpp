#include "staircase/error.hpp"

namespace staircase {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DegenerateMatrix: return "DegenerateMatrix";
        case ErrorCode::DegenerateTriple: return "DegenerateTriple";
        case ErrorCode::OrientationMismatch: return "OrientationMismatch";
        case ErrorCode::ArityError: return "ArityError";
        case ErrorCode::QuadratureOverflow: return "QuadratureOverflow";
        case ErrorCode::NonFiniteSample: return "NonFiniteSample";
        case ErrorCode::DegenerateLeadingTriple: return "DegenerateLeadingTriple";
        case ErrorCode::TailBudgetExceeded: return "TailBudgetExceeded";
        case ErrorCode::IntegrabilityViolation: return "IntegrabilityViolation";
        case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

}  // namespace staircase
