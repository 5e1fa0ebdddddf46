#pragma once

#include <stdexcept>
#include <string>

namespace majorate {

enum class ErrorCode {
    EmptySupport,
    NotNormalized,
    NegativeWeight,
    InvalidDelta,
    TrivialDistribution,
    AlphaOutOfRange,
    SupportMismatch,
    ValueOutOfRange,
    UniformDistribution,
    BudgetExceeded,
    TrivialTarget,
    DegenerateChain,
    ParseError,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised when a staircase would need more composition states than allowed.
class BudgetError : public Error {
public:
    BudgetError(double states, double budget)
        : Error(ErrorCode::BudgetExceeded,
                "composition budget exceeded: need " + std::to_string(states) +
                    " states, budget " + std::to_string(budget)),
          states_(states), budget_(budget) {}

    double states() const noexcept { return states_; }
    double budget() const noexcept { return budget_; }

private:
    double states_;
    double budget_;
};

}  // namespace majorate
