#include "geochrom/errors.hpp"

namespace geochrom {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InputOutOfRange: return "InputOutOfRange";
        case ErrorCode::GeneralPositionViolated: return "GeneralPositionViolated";
        case ErrorCode::InvalidOrder: return "InvalidOrder";
        case ErrorCode::MalformedColoring: return "MalformedColoring";
        case ErrorCode::MalformedInput: return "MalformedInput";
        case ErrorCode::NotComplete: return "NotComplete";
        case ErrorCode::EvenOrderRequired: return "EvenOrderRequired";
        case ErrorCode::UseK4Variant: return "UseK4Variant";
        case ErrorCode::SearchExhausted: return "SearchExhausted";
        case ErrorCode::DuplicateYCoordinate: return "DuplicateYCoordinate";
        case ErrorCode::ApexNotInside: return "ApexNotInside";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NotConvex: return "NotConvex";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

}  // namespace geochrom
