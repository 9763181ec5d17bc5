#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace diagramalg {

enum class ErrorCode {
    MissingVertex,
    DuplicateVertex,
    IndexOutOfRange,
    SyntaxError,
    RankMismatch,
    AlgebraMismatch,
    ZeroSubstitutionWithNegativeExponent,
    CapExceeded,
    FamilyUnsupported,
    DegreeMismatch,
    SizeMismatch,
    InvalidRank,
    ShapeMismatch,
    LabelNotInFamily,
    InvalidClassLabel,
};

std::string_view to_string(ErrorCode code);

// Every domain failure raised by the library is an Error carrying its code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace diagramalg
