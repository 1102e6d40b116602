#include "tconvex/polygon.hpp"

#include <cmath>
#include <utility>

namespace tconvex {

PolygonSpec::PolygonSpec(std::vector<double> phis, std::vector<double> hs)
    : phis_(std::move(phis)), hs_(std::move(hs)) {
    if (phis_.empty())
        throw BadInput("PolygonSpec: need at least one edge");
    if (phis_.size() != hs_.size())
        throw DimensionMismatch("PolygonSpec: phis and hs differ in length");
    t_ = 0.0;
    for (double p : phis_) {
        if (!std::isfinite(p) || p < kPhiMin)
            throw BadAngle("PolygonSpec: angles must be finite and >= 1e-8");
        t_ += p;
    }
    formal_ = false;
    for (double h : hs_) {
        if (!std::isfinite(h))
            throw BadInput("PolygonSpec: support numbers must be finite");
        if (h <= 0.0) formal_ = true;
    }
}

std::vector<LVec> normals(const PolygonSpec& spec) {
    std::vector<LVec> out;
    out.reserve(spec.n());
    double psi = 0.0;
    for (std::size_t i = 0; i < spec.n(); ++i) {
        out.push_back(LVec{std::sinh(psi), std::cosh(psi)});
        psi += spec.phis()[i];
    }
    return out;
}

HalfLengths half_lengths(const PolygonSpec& spec) {
    const std::size_t n = spec.n();
    const auto& phi = spec.phis();
    const auto& h = spec.hs();
    HalfLengths out;
    out.fwd.resize(n);
    out.bwd.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t next = (i + 1) % n;
        const std::size_t prev = (i + n - 1) % n;
        out.fwd[i] = (h[i] * std::cosh(phi[i]) - h[next]) / std::sinh(phi[i]);
        out.bwd[i] = (h[i] * std::cosh(phi[prev]) - h[prev]) / std::sinh(phi[prev]);
    }
    return out;
}

std::vector<double> edge_lengths(const PolygonSpec& spec) {
    const HalfLengths hl = half_lengths(spec);
    std::vector<double> out(spec.n());
    for (std::size_t i = 0; i < spec.n(); ++i)
        out[i] = hl.bwd[i] + hl.fwd[i];
    return out;
}

namespace {

// A point in the null coordinates u = x1 + x2, w = x1 - x2. On the support
// line with normal angle psi the equation <x, eta>_1 = -h becomes
// -u e^{-psi} + w e^{psi} = -2h, so intersections solve with coefficients
// of size e^{|psi gap|} instead of cosh(psi)^2, and the boost H_s acts
// diagonally: u -> e^s u, w -> e^{-s} w.
struct NullPoint {
    double u;
    double w;
};

NullPoint null_vertex(double psi1, double h1, double psi2, double h2) {
    const double gap = psi2 - psi1;
    if (std::abs(gap) <= kSingularTol)
        throw ParallelLines("support_vertex: support lines share their normal");
    const double s = std::sinh(gap);
    return NullPoint{(h1 * std::exp(psi2) - h2 * std::exp(psi1)) / s,
                     (h1 * std::exp(-psi2) - h2 * std::exp(-psi1)) / s};
}

LVec to_cartesian(const NullPoint& p) {
    return LVec{0.5 * (p.u + p.w), 0.5 * (p.u - p.w)};
}

// Normal angles psi_i (prefix sums of the phis), psi_1 = 0.
std::vector<double> normal_angles(const PolygonSpec& spec) {
    std::vector<double> psi(spec.n());
    double acc = 0.0;
    for (std::size_t i = 0; i < spec.n(); ++i) {
        psi[i] = acc;
        acc += spec.phis()[i];
    }
    return psi;
}

std::vector<NullPoint> null_vertices(const PolygonSpec& spec) {
    const std::size_t n = spec.n();
    const auto& h = spec.hs();
    const std::vector<double> psi = normal_angles(spec);
    std::vector<NullPoint> out;
    out.reserve(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        out.push_back(null_vertex(psi[i], h[i], psi[i + 1], h[i + 1]));
    // Wrap vertex: edge n meets the H_t-translate of edge 1, whose normal
    // sits at angle t with the same support number.
    out.push_back(null_vertex(psi[n - 1], h[n - 1], spec.t(), h[0]));
    return out;
}

} // namespace

LVec support_vertex(double psi1, double h1, double psi2, double h2) {
    return to_cartesian(null_vertex(psi1, h1, psi2, h2));
}

std::vector<LVec> vertices(const PolygonSpec& spec) {
    const std::vector<NullPoint> np = null_vertices(spec);
    std::vector<LVec> out;
    out.reserve(np.size());
    for (const NullPoint& p : np) out.push_back(to_cartesian(p));
    return out;
}

PolygonGeometry geometry(const PolygonSpec& spec) {
    PolygonGeometry g;
    g.normals = normals(spec);
    g.feet.reserve(spec.n());
    for (std::size_t i = 0; i < spec.n(); ++i) {
        const double h = spec.hs()[i];
        g.feet.push_back(LVec{h * g.normals[i].x1, h * g.normals[i].x2});
    }
    g.vertices = vertices(spec);
    HalfLengths hl = half_lengths(spec);
    g.half_lengths_fwd = std::move(hl.fwd);
    g.half_lengths_bwd = std::move(hl.bwd);
    g.edge_lengths = edge_lengths(spec);
    return g;
}

double eps_cone(const PolygonSpec& spec) {
    double hmax = 0.0;
    for (double h : spec.hs()) hmax = std::max(hmax, std::abs(h));
    return 1e-12 * std::max(1.0, hmax);
}

TConvexReport is_t_convex(const PolygonSpec& spec) {
    TConvexReport rep;
    rep.eps = eps_cone(spec);
    const std::vector<double> ell = edge_lengths(spec);
    for (std::size_t i = 0; i < ell.size(); ++i)
        if (!(ell[i] > rep.eps)) rep.offending.push_back(i);
    rep.t_convex = rep.offending.empty();
    return rep;
}

double coarea_geometric(const PolygonSpec& spec) {
    if (!is_t_convex(spec).t_convex)
        throw NotTConvex("coarea_geometric: spec has non-positive edge lengths");
    // Shoelace over the fan {0, V_{i-1}, V_i}, evaluated in null coordinates:
    // x1 y2 - x2 y1 = (w_a u_b - u_a w_b) / 2, whose products are of size
    // e^{psi_b - psi_a}, so the sum keeps full precision even when the
    // vertices sit far out on the cone (Cartesian cross products would lose
    // ~|t| digits of the area to cancellation there).
    const std::vector<NullPoint> v = null_vertices(spec);
    const NullPoint v0{v.back().u * std::exp(-spec.t()),
                       v.back().w * std::exp(spec.t())};
    double twice_area = 0.0;
    const NullPoint* prev = &v0;
    for (const NullPoint& cur : v) {
        twice_area += 0.5 * (prev->w * cur.u - prev->u * cur.w);
        prev = &cur;
    }
    return 0.5 * std::abs(twice_area);
}

double coarea_formula(const PolygonSpec& spec) {
    const std::vector<double> ell = edge_lengths(spec);
    double s = 0.0;
    for (std::size_t i = 0; i < ell.size(); ++i)
        s += spec.hs()[i] * ell[i];
    return 0.5 * s;
}

std::vector<LVec> boundary_chain(const PolygonSpec& spec, int periods) {
    if (periods < 0)
        throw BadInput("boundary_chain: periods must be >= 0");
    std::vector<LVec> chain;
    if (periods == 0) return chain;
    const std::vector<LVec> v = vertices(spec);
    const LVec v0 = hyp_translate(-spec.t(), v.back());
    const int k_min = -(periods / 2);
    chain.reserve(static_cast<std::size_t>(periods) * v.size() + 1);
    chain.push_back(hyp_translate(k_min * spec.t(), v0));
    for (int k = k_min; k < k_min + periods; ++k)
        for (const LVec& p : v)
            chain.push_back(hyp_translate(k * spec.t(), p));
    return chain;
}

} // namespace tconvex
