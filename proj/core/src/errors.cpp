#include "critlib/errors.hpp"

namespace critlib {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::RankDeficiencyNotOne: return "RankDeficiencyNotOne";
        case ErrorCode::NotZMatrix: return "NotZMatrix";
        case ErrorCode::NotAvalancheFinite: return "NotAvalancheFinite";
        case ErrorCode::InvalidToppling: return "InvalidToppling";
        case ErrorCode::NegativeInput: return "NegativeInput";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NotInImage: return "NotInImage";
        case ErrorCode::NotCovering: return "NotCovering";
        case ErrorCode::NotNonnegative: return "NotNonnegative";
        case ErrorCode::InvalidRank: return "InvalidRank";
        case ErrorCode::InvalidType: return "InvalidType";
        case ErrorCode::NotNegativeAtNode: return "NotNegativeAtNode";
        case ErrorCode::NotMinuscule: return "NotMinuscule";
        case ErrorCode::NotIntegral: return "NotIntegral";
        case ErrorCode::NoMatchingLinearCharacter: return "NoMatchingLinearCharacter";
        case ErrorCode::KernelCheckFailed: return "KernelCheckFailed";
        case ErrorCode::NotDegreeZero: return "NotDegreeZero";
        case ErrorCode::GeneratorsInvalid: return "GeneratorsInvalid";
        case ErrorCode::PresentationsDisagree: return "PresentationsDisagree";
        case ErrorCode::CorruptTable: return "CorruptTable";
        case ErrorCode::UnknownGroup: return "UnknownGroup";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

}  // namespace critlib
