#include "rap/error.hpp"

namespace rap {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::MalformedFace: return "MalformedFace";
    case ErrorKind::TooFewFaces: return "TooFewFaces";
    case ErrorKind::EdgeNotSharedByTwoFaces: return "EdgeNotSharedByTwoFaces";
    case ErrorKind::OrientationMismatch: return "OrientationMismatch";
    case ErrorKind::EulerViolation: return "EulerViolation";
    case ErrorKind::DisconnectedSkeleton: return "DisconnectedSkeleton";
    case ErrorKind::NotTrivalent: return "NotTrivalent";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NoSuchFace: return "NoSuchFace";
    case ErrorKind::NoSuchEdge: return "NoSuchEdge";
    case ErrorKind::FaceSizeMismatch: return "FaceSizeMismatch";
    case ErrorKind::InvalidCircuit: return "InvalidCircuit";
    case ErrorKind::NotVeryGood: return "NotVeryGood";
    case ErrorKind::HasFlat: return "HasFlat";
    case ErrorKind::CircuitTooShort: return "CircuitTooShort";
    case ErrorKind::DecompositionInvalid: return "DecompositionInvalid";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::IncompleteTrace: return "IncompleteTrace";
    case ErrorKind::ImproperFaceColoring: return "ImproperFaceColoring";
    case ErrorKind::NTooSmall: return "NTooSmall";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::TOutOfRange: return "TOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalError: return "InternalError";
    }
    return "Unknown";
}

} // namespace rap
