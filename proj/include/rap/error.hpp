#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rap {

enum class ErrorKind {
    // construction / validation
    MalformedFace,
    TooFewFaces,
    EdgeNotSharedByTwoFaces,
    OrientationMismatch,
    EulerViolation,
    DisconnectedSkeleton,
    // preconditions of operations
    NotTrivalent,
    NotAdmissible,
    NoSuchFace,
    NoSuchEdge,
    FaceSizeMismatch,
    InvalidCircuit,
    NotVeryGood,
    HasFlat,
    CircuitTooShort,
    DecompositionInvalid,
    TheoremViolation,
    IncompleteTrace,
    ImproperFaceColoring,
    NTooSmall,
    NonFinite,
    TOutOfRange,
    // plumbing
    ParseError,
    InternalError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what)
{
    throw Error(kind, what);
}

// Internal consistency check. A failure means a bug (or a false theorem),
// never bad user input.
inline void ensure(bool condition, const std::string& what)
{
    if (!condition)
        throw Error(ErrorKind::InternalError, what);
}

} // namespace rap
