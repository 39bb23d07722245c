#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sarkisov {

enum class ErrorCode {
    NonIntegralGenus,
    UnsupportedBase,
    UnsupportedKcube,
    UnsupportedGenus,
    UnsupportedRank,
    InvalidAmbient,
    InvalidDenominator,
    InvalidArgument,
    InvalidFiberDegree,
    ConstructionViolated,
    MissingEntry,
    MalformedRow,
    MalformedJson,
};

[[nodiscard]] constexpr std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::UnsupportedBase: return "UnsupportedBase";
    case ErrorCode::UnsupportedKcube: return "UnsupportedKcube";
    case ErrorCode::UnsupportedGenus: return "UnsupportedGenus";
    case ErrorCode::UnsupportedRank: return "UnsupportedRank";
    case ErrorCode::InvalidAmbient: return "InvalidAmbient";
    case ErrorCode::InvalidDenominator: return "InvalidDenominator";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidFiberDegree: return "InvalidFiberDegree";
    case ErrorCode::ConstructionViolated: return "ConstructionViolated";
    case ErrorCode::MissingEntry: return "MissingEntry";
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::MalformedJson: return "MalformedJson";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message)
        , code_(code)
    {
    }

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace sarkisov
