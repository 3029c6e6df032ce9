#pragma once

#include <stdexcept>
#include <string>

namespace caustic {

enum class ErrorCode {
    ParseError,
    ExactModeRequired,
    UnknownClass,
    EliminationFailure,
    DegenerateCriticalPoint,
    NotMorse,
    CausticHit,
    MatchingAmbiguous,
    StepTooCoarse,
    DeltaTooLarge,
    NotD4Point,
    InvalidFlip,
    InvalidSeed,
    InvalidDivide,
    StateExplosion,
    VerificationMismatch,
    InvalidClassParameter,
    NotSimpleClass,
    RecipeMismatch,
    Collision,
    InvalidFamily,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// CLI exit status: 2 invalid input, 3 numeric failure, 4 verification mismatch
int exit_code(ErrorCode c);

}  // namespace caustic
