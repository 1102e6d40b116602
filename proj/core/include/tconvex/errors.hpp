#pragma once

#include <stdexcept>
#include <string>

namespace tconvex {

// Domain errors carry a stable name so the CLI can print it on the
// diagnostic stream and scripts can match on it.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define TCONVEX_DEFINE_ERROR(NAME)                                  \
    class NAME : public Error {                                     \
    public:                                                         \
        explicit NAME(const std::string& what) : Error(#NAME, what) {} \
    }

TCONVEX_DEFINE_ERROR(ZeroVector);
TCONVEX_DEFINE_ERROR(NotFutureTimelike);
TCONVEX_DEFINE_ERROR(ParallelLines);
TCONVEX_DEFINE_ERROR(BadAngle);
TCONVEX_DEFINE_ERROR(BadInput);
TCONVEX_DEFINE_ERROR(DimensionMismatch);
TCONVEX_DEFINE_ERROR(NotTConvex);
TCONVEX_DEFINE_ERROR(NonpositiveCoarea);
TCONVEX_DEFINE_ERROR(TooFewFacets);
TCONVEX_DEFINE_ERROR(Infeasible);
TCONVEX_DEFINE_ERROR(NoConvergence);
TCONVEX_DEFINE_ERROR(NumericalInconsistency);
TCONVEX_DEFINE_ERROR(IoError);

#undef TCONVEX_DEFINE_ERROR

} // namespace tconvex
