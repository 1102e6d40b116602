#pragma once

#include "tconvex/lorentz.hpp"

#include <cstddef>
#include <vector>

namespace tconvex {

// Angles below this are rejected: the half-length relations divide by
// sinh(phi), and coincident normals would not bound distinct edges.
inline constexpr double kPhiMin = 1e-8;

// Candidate t-convex polygon given by angles phi_1..phi_n between
// consecutive edge normals and support numbers h_1..h_n. t = sum of phis.
// Any real h is admitted (the coarea form is defined on all of R^n); specs
// with some h <= 0 are flagged formal and cannot describe a genuine polygon.
class PolygonSpec {
public:
    PolygonSpec(std::vector<double> phis, std::vector<double> hs);

    const std::vector<double>& phis() const noexcept { return phis_; }
    const std::vector<double>& hs() const noexcept { return hs_; }
    std::size_t n() const noexcept { return phis_.size(); }
    double t() const noexcept { return t_; }
    bool formal() const noexcept { return formal_; }

private:
    std::vector<double> phis_;
    std::vector<double> hs_;
    double t_;
    bool formal_;
};

struct HalfLengths {
    // fwd[i] = h_{i,i+1}, distance from foot p_i forward to the vertex
    // shared with edge i+1; bwd[i] = h_{i,i-1}, backward likewise (cyclic).
    std::vector<double> fwd;
    std::vector<double> bwd;
};

// Everything derived from a spec for one fundamental period.
struct PolygonGeometry {
    std::vector<LVec> normals;      // unit future timelike eta_i, eta_1 = (0,1)
    std::vector<LVec> feet;         // p_i = h_i * eta_i
    std::vector<LVec> vertices;     // vertex i sits between edges i and i+1
    std::vector<double> half_lengths_fwd;
    std::vector<double> half_lengths_bwd;
    std::vector<double> edge_lengths; // l_i = bwd_i + fwd_i
};

struct TConvexReport {
    bool t_convex = false;
    std::vector<std::size_t> offending; // 0-based indices with l_i <= eps
    double eps = 0.0;
};

// eta_i = (sinh psi_i, cosh psi_i) with psi_i the prefix sum of the angles;
// consecutive normals satisfy eta_{i+1} = H_{phi_i}(eta_i).
std::vector<LVec> normals(const PolygonSpec& spec);

// h_{i,i+1} = (h_i cosh phi_i - h_{i+1}) / sinh phi_i and the backward
// counterpart, cyclic in i.
HalfLengths half_lengths(const PolygonSpec& spec);

std::vector<double> edge_lengths(const PolygonSpec& spec);

// Intersection of two support lines given by the hyperbolic angles of their
// unit normals (sinh psi, cosh psi) and their support numbers. Solved in the
// null coordinates u = x1 + x2, w = x1 - x2, where the line coefficients are
// exactly exp(+-psi): the solve stays accurate far out on the hyperbola,
// where a Cartesian 2x2 elimination loses the determinant to cancellation.
// Throws ParallelLines when the angle gap is below the singularity tolerance.
LVec support_vertex(double psi1, double h1, double psi2, double h2);

// Vertex i is the intersection of the support lines of edges i and i+1;
// the wrap vertex (i = n) uses the H_t-translate of the first line.
std::vector<LVec> vertices(const PolygonSpec& spec);

PolygonGeometry geometry(const PolygonSpec& spec);

// Degenerate edges are rejected with a tolerance scaled to the support
// numbers: eps = 1e-12 * max(1, max |h_i|).
double eps_cone(const PolygonSpec& spec);

TConvexReport is_t_convex(const PolygonSpec& spec);

// Area of the fundamental domain, computed as the oracle: Euclidean shoelace
// over the triangle fan {0, V_{i-1}, V_i} with the wrap vertex pulled back
// by H_{-t}. Requires a t-convex spec.
double coarea_geometric(const PolygonSpec& spec);

// Closed form (1/2) sum h_i l_i; defined for formal specs too.
double coarea_formula(const PolygonSpec& spec);

// Boundary polyline over `periods` fundamental periods centered on period 0
// (period offsets -floor(periods/2) .. -floor(periods/2)+periods-1).
// Empty for periods = 0; otherwise periods*n + 1 points.
std::vector<LVec> boundary_chain(const PolygonSpec& spec, int periods);

} // namespace tconvex
