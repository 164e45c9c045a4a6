#pragma once

#include <stdexcept>
#include <string>

namespace staircase {

enum class ErrorCode {
    DegenerateMatrix,
    DegenerateTriple,
    OrientationMismatch,
    ArityError,
    QuadratureOverflow,
    NonFiniteSample,
    DegenerateLeadingTriple,
    TailBudgetExceeded,
    IntegrabilityViolation,
    DegreeTooSmall,
    ArityMismatch,
    ConfigError,
    PreconditionViolated,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace staircase
