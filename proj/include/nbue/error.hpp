#pragma once

#include <stdexcept>
#include <string>

namespace nbue {

enum class ErrorCode {
    empty,
    non_positive_value,
    degenerate_ttt,
    invalid_parameter,
    invalid_alpha,
    out_of_range,
    unsupported_n,
    no_asymptotic_rule,
    bad_shape,
    parse_error,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::empty: return "Empty";
    case ErrorCode::non_positive_value: return "NonPositiveValue";
    case ErrorCode::degenerate_ttt: return "DegenerateTTT";
    case ErrorCode::invalid_parameter: return "InvalidParameter";
    case ErrorCode::invalid_alpha: return "InvalidAlpha";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::unsupported_n: return "UnsupportedN";
    case ErrorCode::no_asymptotic_rule: return "NoAsymptoticRule";
    case ErrorCode::bad_shape: return "BadShape";
    case ErrorCode::parse_error: return "ParseError";
    }
    return "Unknown";
}

// Every failure raised by the library carries a machine-checkable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace nbue
