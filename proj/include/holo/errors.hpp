#pragma once

#include <stdexcept>
#include <string>

namespace holo {

/// Base of every error raised by the library. The CLI maps subclasses to
/// exit codes, so new error kinds should derive from one of these.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define HOLO_DEFINE_ERROR(Name, Base)                                         \
    class Name : public Base                                                  \
    {                                                                         \
    public:                                                                   \
        using Base::Base;                                                     \
        const char* kind() const noexcept override { return #Name; }         \
    };

// A product or derivative would leave the truncated polynomial ring.
HOLO_DEFINE_ERROR(DegreeOverflow, Error)
// Pairing or combining forms of different exterior degree.
HOLO_DEFINE_ERROR(DegreeMismatch, Error)
HOLO_DEFINE_ERROR(DimensionMismatch, Error)
HOLO_DEFINE_ERROR(ParseError, Error)
HOLO_DEFINE_ERROR(NotASplitting, Error)
HOLO_DEFINE_ERROR(NotAComplex, Error)
HOLO_DEFINE_ERROR(NotAChainMap, Error)
HOLO_DEFINE_ERROR(NotCompatible, Error)
// Cohomology is not locally free in the evaluated model.
HOLO_DEFINE_ERROR(RankJump, Error)
// Cohomology representatives found at the base point are not global
// cocycles orthogonal to the image; treated as a failure of local freeness.
HOLO_DEFINE_ERROR(NonGlobalFrame, RankJump)
HOLO_DEFINE_ERROR(ToleranceUnreachable, Error)
HOLO_DEFINE_ERROR(SizeMismatch, Error)
HOLO_DEFINE_ERROR(UnknownLabel, Error)

#undef HOLO_DEFINE_ERROR

} // namespace holo
