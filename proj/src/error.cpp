#include "sshare/error.hpp"

namespace sshare {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArmaParams: return "InvalidArmaParams";
    case ErrorCode::ZeroLength: return "ZeroLength";
    case ErrorCode::EmptyTrace: return "EmptyTrace";
    case ErrorCode::InsufficientRealizations: return "InsufficientRealizations";
    case ErrorCode::InvalidLevel: return "InvalidLevel";
    case ErrorCode::NonPositiveStatistic: return "NonPositiveStatistic";
    case ErrorCode::InvalidProblem: return "InvalidProblem";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::AllSamplesZeroDemand: return "AllSamplesZeroDemand";
    case ErrorCode::UndefinedFairness: return "UndefinedFairness";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace sshare
