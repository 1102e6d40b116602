#pragma once

#include "tconvex/errors.hpp"

namespace tconvex {

// Vector of the Lorentz plane: x1 is the space coordinate, x2 the time
// coordinate. The plane carries the indefinite product <x,y> = x1*y1 - x2*y2.
struct LVec {
    double x1 = 0.0;
    double x2 = 0.0;

    friend bool operator==(const LVec&, const LVec&) = default;
};

enum class Causality { spacelike, timelike, lightlike };

struct CausalClass {
    Causality kind;
    bool future; // meaningful only for timelike/lightlike vectors
};

// The line { x : <x, normal> = offset } with a future timelike normal.
// For the orthogonal line through a = h*eta (eta unit future timelike):
// normal = eta, offset = -h.
struct SupportLine {
    LVec normal;
    double offset = 0.0;
};

// Causal classification happens after rescaling max |coordinate| to 1;
// |<v,v>| below this threshold then counts as lightlike.
inline constexpr double kLightTol = 1e-12;
// Threshold on the normalized 2x2 determinant below which two support
// lines count as parallel.
inline constexpr double kSingularTol = 1e-12;

double lprod(const LVec& a, const LVec& b);

CausalClass classify(const LVec& v);

// True iff v is a (nonzero, finite) future timelike vector. Never throws.
bool is_future_timelike(const LVec& v);

// Apply the hyperbolic translation with matrix (cosh t, sinh t; sinh t, cosh t).
// Evaluated in null coordinates u = x1+x2 -> e^t u, w = x1-x2 -> e^{-t} w,
// which keeps the determinant at e^t * e^{-t} instead of the catastrophically
// cancelling cosh^2 - sinh^2 (off by ~1e-8 at t = 10).
LVec hyp_translate(double t, const LVec& v);

// Determinant of the map applied by hyp_translate, as evaluated in floating
// point: exp(t) * exp(-t).
double det_hyp_translate(double t);

// Lorentzian angle phi >= 0 between two future timelike vectors:
// cosh phi = -<x,y> / sqrt(<x,x><y,y>).
double langle(const LVec& x, const LVec& y);

// The line through a, parallel to the direction orthogonal to a.
SupportLine support_line(const LVec& a);

// Unique intersection point of two non-parallel lines.
LVec line_intersect(const SupportLine& l1, const SupportLine& l2);

} // namespace tconvex
