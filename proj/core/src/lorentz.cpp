#include "tconvex/lorentz.hpp"

#include <algorithm>
#include <cmath>

namespace tconvex {

double lprod(const LVec& a, const LVec& b) {
    return a.x1 * b.x1 - a.x2 * b.x2;
}

CausalClass classify(const LVec& v) {
    if (!std::isfinite(v.x1) || !std::isfinite(v.x2))
        throw BadInput("classify: non-finite coordinates");
    const double scale = std::max(std::abs(v.x1), std::abs(v.x2));
    if (scale <= kLightTol)
        throw ZeroVector("classify: vector is zero within tolerance");
    const LVec u{v.x1 / scale, v.x2 / scale};
    const double q = lprod(u, u);
    CausalClass c{};
    if (q > kLightTol)
        c.kind = Causality::spacelike;
    else if (q < -kLightTol)
        c.kind = Causality::timelike;
    else
        c.kind = Causality::lightlike;
    c.future = v.x2 > 0.0;
    return c;
}

bool is_future_timelike(const LVec& v) {
    if (!std::isfinite(v.x1) || !std::isfinite(v.x2)) return false;
    if (std::max(std::abs(v.x1), std::abs(v.x2)) <= kLightTol) return false;
    const CausalClass c = classify(v);
    return c.kind == Causality::timelike && c.future;
}

LVec hyp_translate(double t, const LVec& v) {
    if (!std::isfinite(t))
        throw BadInput("hyp_translate: non-finite parameter");
    if (t == 0.0) return v; // exact identity
    const double ep = std::exp(t);
    const double em = std::exp(-t);
    const double u = (v.x1 + v.x2) * ep;
    const double w = (v.x1 - v.x2) * em;
    return LVec{0.5 * (u + w), 0.5 * (u - w)};
}

double det_hyp_translate(double t) {
    return std::exp(t) * std::exp(-t);
}

double langle(const LVec& x, const LVec& y) {
    if (!is_future_timelike(x) || !is_future_timelike(y))
        throw NotFutureTimelike("langle: both arguments must be future timelike");
    const double qx = lprod(x, x);
    const double qy = lprod(y, y);
    double c = -lprod(x, y) / std::sqrt(qx * qy);
    if (c < 1.0) {
        // Roundoff can push the ratio slightly below 1 for near-proportional
        // vectors; anything further below means the inputs were not genuinely
        // future timelike.
        if (c < 1.0 - 1e-12)
            throw NotFutureTimelike("langle: cosh ratio below 1 beyond tolerance");
        c = 1.0;
    }
    return std::acosh(c);
}

SupportLine support_line(const LVec& a) {
    if (!is_future_timelike(a))
        throw NotFutureTimelike("support_line: base point must be future timelike");
    const double h = std::sqrt(-lprod(a, a));
    return SupportLine{LVec{a.x1 / h, a.x2 / h}, -h};
}

LVec line_intersect(const SupportLine& l1, const SupportLine& l2) {
    // <x,n> = offset reads n.x1*x1 - n.x2*x2 = offset.
    const LVec& n1 = l1.normal;
    const LVec& n2 = l2.normal;
    const double det = -n1.x1 * n2.x2 + n1.x2 * n2.x1;
    const double s1 = std::hypot(n1.x1, n1.x2);
    const double s2 = std::hypot(n2.x1, n2.x2);
    if (s1 == 0.0 || s2 == 0.0 || std::abs(det) <= kSingularTol * s1 * s2)
        throw ParallelLines("line_intersect: normals are proportional within tolerance");
    // Cramer on [n1.x1 -n1.x2; n2.x1 -n2.x2] x = (offset1, offset2).
    const double x1 = (l1.offset * (-n2.x2) - (-n1.x2) * l2.offset) / det;
    const double x2 = (n1.x1 * l2.offset - l1.offset * n2.x1) / det;
    return LVec{x1, x2};
}

} // namespace tconvex
