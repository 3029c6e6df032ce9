#include "caustic/errors.hpp"

namespace caustic {

const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ExactModeRequired: return "ExactModeRequired";
        case ErrorCode::UnknownClass: return "UnknownClass";
        case ErrorCode::EliminationFailure: return "EliminationFailure";
        case ErrorCode::DegenerateCriticalPoint: return "DegenerateCriticalPoint";
        case ErrorCode::NotMorse: return "NotMorse";
        case ErrorCode::CausticHit: return "CausticHit";
        case ErrorCode::MatchingAmbiguous: return "MatchingAmbiguous";
        case ErrorCode::StepTooCoarse: return "StepTooCoarse";
        case ErrorCode::DeltaTooLarge: return "DeltaTooLarge";
        case ErrorCode::NotD4Point: return "NotD4Point";
        case ErrorCode::InvalidFlip: return "InvalidFlip";
        case ErrorCode::InvalidSeed: return "InvalidSeed";
        case ErrorCode::InvalidDivide: return "InvalidDivide";
        case ErrorCode::StateExplosion: return "StateExplosion";
        case ErrorCode::VerificationMismatch: return "VerificationMismatch";
        case ErrorCode::InvalidClassParameter: return "InvalidClassParameter";
        case ErrorCode::NotSimpleClass: return "NotSimpleClass";
        case ErrorCode::RecipeMismatch: return "RecipeMismatch";
        case ErrorCode::Collision: return "Collision";
        case ErrorCode::InvalidFamily: return "InvalidFamily";
    }
    return "Error";
}

int exit_code(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError:
        case ErrorCode::ExactModeRequired:
        case ErrorCode::UnknownClass:
        case ErrorCode::NotD4Point:
        case ErrorCode::InvalidFlip:
        case ErrorCode::InvalidSeed:
        case ErrorCode::InvalidDivide:
        case ErrorCode::InvalidClassParameter:
        case ErrorCode::NotSimpleClass:
        case ErrorCode::InvalidFamily:
            return 2;
        case ErrorCode::VerificationMismatch:
        case ErrorCode::RecipeMismatch:
            return 4;
        default:
            return 3;
    }
}

}  // namespace caustic
