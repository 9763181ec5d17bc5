#include "diagramalg/errors.hpp"

namespace diagramalg {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::MissingVertex: return "MissingVertex";
        case ErrorCode::DuplicateVertex: return "DuplicateVertex";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::RankMismatch: return "RankMismatch";
        case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorCode::ZeroSubstitutionWithNegativeExponent: return "ZeroSubstitutionWithNegativeExponent";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::FamilyUnsupported: return "FamilyUnsupported";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::InvalidRank: return "InvalidRank";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::LabelNotInFamily: return "LabelNotInFamily";
        case ErrorCode::InvalidClassLabel: return "InvalidClassLabel";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace diagramalg
