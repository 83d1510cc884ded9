#pragma once

#include <stdexcept>
#include <string>

namespace tlms {

enum class Err {
    NullDivisor,
    OutOfRange,
    OutsideWedge,
    DomainError,
    WindingNotSupported,
    RealnessViolation,
    NotLightlikeCurve,
    NotLightlikeField,
    NotOrthogonal,
    TotallyDegenerate,
    RadiusOutOfRange,
    InfeasibleMean,
    MeanMismatch,
    WindingMismatch,
    BadRange,
    NotSpaceOrTimelike,
    GridOutsideDomain,
    ParseError,
    IoError,
};

inline const char* err_name(Err k) {
    switch (k) {
        case Err::NullDivisor: return "NullDivisor";
        case Err::OutOfRange: return "OutOfRange";
        case Err::OutsideWedge: return "OutsideWedge";
        case Err::DomainError: return "DomainError";
        case Err::WindingNotSupported: return "WindingNotSupported";
        case Err::RealnessViolation: return "RealnessViolation";
        case Err::NotLightlikeCurve: return "NotLightlikeCurve";
        case Err::NotLightlikeField: return "NotLightlikeField";
        case Err::NotOrthogonal: return "NotOrthogonal";
        case Err::TotallyDegenerate: return "TotallyDegenerate";
        case Err::RadiusOutOfRange: return "RadiusOutOfRange";
        case Err::InfeasibleMean: return "InfeasibleMean";
        case Err::MeanMismatch: return "MeanMismatch";
        case Err::WindingMismatch: return "WindingMismatch";
        case Err::BadRange: return "BadRange";
        case Err::NotSpaceOrTimelike: return "NotSpaceOrTimelike";
        case Err::GridOutsideDomain: return "GridOutsideDomain";
        case Err::ParseError: return "ParseError";
        case Err::IoError: return "IoError";
    }
    return "Unknown";
}

// Single exception type; the kind tag is what the CLI maps to exit codes
// and what tests match on.
class Error : public std::runtime_error {
public:
    Error(Err kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Err kind() const { return kind_; }

private:
    Err kind_;
};

[[noreturn]] inline void raise(Err k, const std::string& msg) { throw Error(k, msg); }

}  // namespace tlms
