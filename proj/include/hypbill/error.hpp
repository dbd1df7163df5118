#pragma once

#include <stdexcept>
#include <string>

namespace hypbill {

enum class ErrorCode {
    // hypgeo
    NotInUpperHalfPlane,
    DegenerateEndpoints,
    PointNotOnGeodesic,
    // polygon
    NonRationalAngle,
    DegenerateArea,
    NotConvex,
    ClassMismatch,
    NoSuchPolygon,
    BisectionFailure,
    ImmediateRepetition,
    InvalidSideLabel,
    // billiard
    VertexHit,
    AsymptoticToIdealVertex,
    NoIntersection,
    NotAdmissible,
    NonHyperbolicHolonomy,
    NotRealized,
    // symdyn / sftlab / shiftspace
    AlphabetMismatch,
    AlphabetTooLarge,
    BudgetExceeded,
    BlockTooShort,
    EmptyShift,
    NotIrreducible,
    NonConvergence,
    // plumbing
    ParseError,
    IoError,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code) noexcept;

/// True for errors that stem from malformed input files or I/O rather than
/// from the mathematics of a well-formed request.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace hypbill
