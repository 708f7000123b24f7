#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace derhed {

enum class ErrorKind {
    InvalidInput,
    InvalidField,
    InfiniteDimensional,
    NegativeResult,
    AlgebraMismatch,
    InvalidComplex,
    FieldTooSmall,
    NotIndecomposable,
    IsomorphicReps,
    UnknownOrbit,
    InvalidGraph,
    NotABlock,
    IncompleteHeart,
    NegativeWalkAtSource,
    Unreachable,
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::InvalidField: return "InvalidField";
        case ErrorKind::InfiniteDimensional: return "InfiniteDimensional";
        case ErrorKind::NegativeResult: return "NegativeResult";
        case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorKind::InvalidComplex: return "InvalidComplex";
        case ErrorKind::FieldTooSmall: return "FieldTooSmall";
        case ErrorKind::NotIndecomposable: return "NotIndecomposable";
        case ErrorKind::IsomorphicReps: return "IsomorphicReps";
        case ErrorKind::UnknownOrbit: return "UnknownOrbit";
        case ErrorKind::InvalidGraph: return "InvalidGraph";
        case ErrorKind::NotABlock: return "NotABlock";
        case ErrorKind::IncompleteHeart: return "IncompleteHeart";
        case ErrorKind::NegativeWalkAtSource: return "NegativeWalkAtSource";
        case ErrorKind::Unreachable: return "Unreachable";
    }
    return "Unknown";
}

/// Every failure raised by the library. The kind is stable and is what the
/// CLI reports in its machine-readable error object.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace derhed
