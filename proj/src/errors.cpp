#include "majorate/errors.hpp"

namespace majorate {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptySupport: return "EmptySupport";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::NegativeWeight: return "NegativeWeight";
        case ErrorCode::InvalidDelta: return "InvalidDelta";
        case ErrorCode::TrivialDistribution: return "TrivialDistribution";
        case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
        case ErrorCode::SupportMismatch: return "SupportMismatch";
        case ErrorCode::ValueOutOfRange: return "ValueOutOfRange";
        case ErrorCode::UniformDistribution: return "UniformDistribution";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::TrivialTarget: return "TrivialTarget";
        case ErrorCode::DegenerateChain: return "DegenerateChain";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace majorate
