#include "htp/errors.hpp"

namespace htp {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::ResidueOutOfRange: return "ResidueOutOfRange";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::TokenTooLong: return "TokenTooLong";
        case ErrorCode::CodePointOutOfRange: return "CodePointOutOfRange";
        case ErrorCode::EmptyToken: return "EmptyToken";
        case ErrorCode::ContainsNull: return "ContainsNull";
        case ErrorCode::InvalidCodePoint: return "InvalidCodePoint";
        case ErrorCode::InvalidUtf8: return "InvalidUtf8";
        case ErrorCode::IntegerOutOfRange: return "IntegerOutOfRange";
        case ErrorCode::DegeneratePhase: return "DegeneratePhase";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::ZeroWeightSum: return "ZeroWeightSum";
        case ErrorCode::EmptySentence: return "EmptySentence";
        case ErrorCode::EmptyCorpus: return "EmptyCorpus";
        case ErrorCode::ZeroVariance: return "ZeroVariance";
        case ErrorCode::FileNotFound: return "FileNotFound";
        case ErrorCode::NoValidRows: return "NoValidRows";
    }
    return "UnknownError";
}

}  // namespace htp
