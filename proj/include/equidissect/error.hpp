#pragma once

#include <stdexcept>
#include <string>

namespace equidissect {

enum class ErrorCode {
    ZeroDenominator,
    DivideByZero,
    FieldMismatch,
    NegativeRadicand,
    ParamOutOfRange,
    BadHypotheses,
    PolygonMismatch,
    NotCommensurable,
    NotATiling,
    MalformedInput,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace equidissect
