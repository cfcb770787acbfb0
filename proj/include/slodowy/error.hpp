#pragma once

#include <stdexcept>
#include <string>

namespace slodowy {

enum class ErrorKind {
    ParseError,
    NotAPartition,
    SizeMismatch,
    NotNested,
    DegenerateAmbient,
    DimensionMismatch,
    ShapeError,
    NotOnFiber,
    NotStable,
    IncidenceViolation,
    NotNilpotent,
    ExactnessFailure,
    InternalInconsistency,
};

inline const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::NotAPartition: return "NotAPartition";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::NotNested: return "NotNested";
        case ErrorKind::DegenerateAmbient: return "DegenerateAmbient";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::ShapeError: return "ShapeError";
        case ErrorKind::NotOnFiber: return "NotOnFiber";
        case ErrorKind::NotStable: return "NotStable";
        case ErrorKind::IncidenceViolation: return "IncidenceViolation";
        case ErrorKind::NotNilpotent: return "NotNilpotent";
        case ErrorKind::ExactnessFailure: return "ExactnessFailure";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    }
    return "Error";
}

/// Library-wide exception. `kind()` names the violated precondition;
/// the CLI maps InternalInconsistency to exit 2 and everything else to exit 1.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline void require(bool cond, ErrorKind k, const std::string& msg) {
    if (!cond) fail(k, msg);
}

} // namespace slodowy
