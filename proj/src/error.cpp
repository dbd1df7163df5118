#include "hypbill/error.hpp"

namespace hypbill {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotInUpperHalfPlane: return "NotInUpperHalfPlane";
        case ErrorCode::DegenerateEndpoints: return "DegenerateEndpoints";
        case ErrorCode::PointNotOnGeodesic: return "PointNotOnGeodesic";
        case ErrorCode::NonRationalAngle: return "NonRationalAngle";
        case ErrorCode::DegenerateArea: return "DegenerateArea";
        case ErrorCode::NotConvex: return "NotConvex";
        case ErrorCode::ClassMismatch: return "ClassMismatch";
        case ErrorCode::NoSuchPolygon: return "NoSuchPolygon";
        case ErrorCode::BisectionFailure: return "BisectionFailure";
        case ErrorCode::ImmediateRepetition: return "ImmediateRepetition";
        case ErrorCode::InvalidSideLabel: return "InvalidSideLabel";
        case ErrorCode::VertexHit: return "VertexHit";
        case ErrorCode::AsymptoticToIdealVertex: return "AsymptoticToIdealVertex";
        case ErrorCode::NoIntersection: return "NoIntersection";
        case ErrorCode::NotAdmissible: return "NotAdmissible";
        case ErrorCode::NonHyperbolicHolonomy: return "NonHyperbolicHolonomy";
        case ErrorCode::NotRealized: return "NotRealized";
        case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
        case ErrorCode::AlphabetTooLarge: return "AlphabetTooLarge";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::BlockTooShort: return "BlockTooShort";
        case ErrorCode::EmptyShift: return "EmptyShift";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
    return code == ErrorCode::ParseError || code == ErrorCode::IoError;
}

}  // namespace hypbill
