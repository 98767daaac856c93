#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sshare {

enum class ErrorCode {
    InvalidArmaParams,
    ZeroLength,
    EmptyTrace,
    InsufficientRealizations,
    InvalidLevel,
    NonPositiveStatistic,
    InvalidProblem,
    InvalidGrid,
    AllSamplesZeroDemand,
    UndefinedFairness,
    FileNotFound,
    ParseError,
    ValidationError,
    IoError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` classifies the failure.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace sshare
