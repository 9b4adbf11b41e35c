#pragma once

#include <stdexcept>
#include <string>

namespace scx {

/// Error codes for the domain-level failure modes of the library.
enum class ErrorCode {
    NegativeWeight,
    EmptyFacet,
    NotAFacet,
    NotASubcomplex,
    NotProper,
    NotAComplex,
    NotSymmetric,
    SourceNotConnected,
    NotACovering,
    NotStrong,
    NotConstant,
    NotFree,
    NotContractible,
    NotPure,
    NegativeInducedWeight,
    InvalidSimplex,
    InvalidMap,
    InvalidWeighting,
    ParseError,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a typed error code plus a human-readable message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NegativeWeight: return "NegativeWeight";
        case ErrorCode::EmptyFacet: return "EmptyFacet";
        case ErrorCode::NotAFacet: return "NotAFacet";
        case ErrorCode::NotASubcomplex: return "NotASubcomplex";
        case ErrorCode::NotProper: return "NotProper";
        case ErrorCode::NotAComplex: return "NotAComplex";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::SourceNotConnected: return "SourceNotConnected";
        case ErrorCode::NotACovering: return "NotACovering";
        case ErrorCode::NotStrong: return "NotStrong";
        case ErrorCode::NotConstant: return "NotConstant";
        case ErrorCode::NotFree: return "NotFree";
        case ErrorCode::NotContractible: return "NotContractible";
        case ErrorCode::NotPure: return "NotPure";
        case ErrorCode::NegativeInducedWeight: return "NegativeInducedWeight";
        case ErrorCode::InvalidSimplex: return "InvalidSimplex";
        case ErrorCode::InvalidMap: return "InvalidMap";
        case ErrorCode::InvalidWeighting: return "InvalidWeighting";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

}  // namespace scx
