#pragma once

#include <stdexcept>
#include <string>

namespace htp {

// Every failure mode the library reports. Callers that care about the
// specific condition switch on code(); everyone else sees a runtime_error.
enum class ErrorCode {
    NotInvertible,
    ResidueOutOfRange,
    LengthMismatch,
    TokenTooLong,
    CodePointOutOfRange,
    EmptyToken,
    ContainsNull,
    InvalidCodePoint,
    InvalidUtf8,
    IntegerOutOfRange,
    DegeneratePhase,
    DimensionMismatch,
    ZeroVector,
    ZeroWeightSum,
    EmptySentence,
    EmptyCorpus,
    ZeroVariance,
    FileNotFound,
    NoValidRows,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace htp
