#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace geochrom {

enum class ErrorCode {
    InputOutOfRange,
    GeneralPositionViolated,
    InvalidOrder,
    MalformedColoring,
    MalformedInput,
    NotComplete,
    EvenOrderRequired,
    UseK4Variant,
    SearchExhausted,
    DuplicateYCoordinate,
    ApexNotInside,
    PreconditionFailed,
    TooLarge,
    NotConvex,
    VerificationFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can dispatch on the kind rather than the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace geochrom
