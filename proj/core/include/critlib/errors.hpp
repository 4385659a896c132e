#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace critlib {

enum class ErrorCode {
    Singular,
    RankDeficiencyNotOne,
    NotZMatrix,
    NotAvalancheFinite,
    InvalidToppling,
    NegativeInput,
    TooLarge,
    NotInImage,
    NotCovering,
    NotNonnegative,
    InvalidRank,
    InvalidType,
    NotNegativeAtNode,
    NotMinuscule,
    NotIntegral,
    NoMatchingLinearCharacter,
    KernelCheckFailed,
    NotDegreeZero,
    GeneratorsInvalid,
    PresentationsDisagree,
    CorruptTable,
    UnknownGroup,
    ParseError,
    InvalidArgument,
    VerificationFailed,
};

std::string_view error_code_name(ErrorCode code);

// Every domain failure in the library is reported through this type.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace critlib
