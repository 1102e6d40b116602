#pragma once

#include "tconvex/orthoscheme.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace tconvex {

// The (n-1)! charts of the glued space: every ordering of the angle list up
// to cyclic rotation, canonicalized by rotating index 0 to the front (index
// sequences, so repeated angle values still count as distinct orderings).
class ChartSet {
public:
    ChartSet(std::vector<double> phis, std::vector<std::vector<std::size_t>> orders);

    std::size_t n() const noexcept { return phis_.size(); }
    std::size_t size() const noexcept { return orders_.size(); }
    const std::vector<double>& phis() const noexcept { return phis_; }
    const std::vector<std::vector<std::size_t>>& orders() const noexcept {
        return orders_;
    }
    // Angle list of one chart.
    std::vector<double> angles(std::size_t chart) const;

private:
    std::vector<double> phis_;
    std::vector<std::vector<std::size_t>> orders_;
};

enum class FaceType { N, S };

struct ConeAngleReport {
    std::array<double, 3> merged_triple{};
    double theta_sum = 0.0;    // 2 * (three distinct dihedral angles)
    double theta_closed = 0.0; // from the closed form for cos(theta/2)
    double cos_half_theta = 0.0;
    FaceType face_type = FaceType::S;
};

ChartSet enumerate_charts(const std::vector<double>& phis);

// Charts in which both index pairs are cyclically adjacent (the charts
// touching the codimension-2 face obtained by merging those pairs).
std::vector<std::size_t> adjacency_charts(const ChartSet& charts,
                                          std::array<std::size_t, 2> merge1,
                                          std::array<std::size_t, 2> merge2);

// Total angle around an N-type face: four charts meet there, each at a right
// dihedral angle (the merged pairs are non-adjacent facets). Returns
// 4*acos(0), which is exactly the double 2*pi.
double n_face_total_angle();

ConeAngleReport n_face_report();

// Cone angle around the S-type face created by merging three consecutive
// angles a, b, c. Computed both as twice the sum of the three distinct
// dihedral angles (each ordering of the triple as the middle element) and
// via the closed form
//   cos(theta/2) = [sinh a sinh b sinh c
//                   - sinh(a+b+c)(sinh a sinh b + sinh b sinh c + sinh c sinh a)]
//                  / [sinh(a+b) sinh(b+c) sinh(c+a)],
// which lies in (-1, 0). theta/2 is in (pi, 3pi/2), so the closed branch is
// theta = 4*pi - 2*arccos(cos(theta/2)); the principal 2*arccos branch would
// land in (pi, 2*pi) and never match the summed angles.
ConeAngleReport s_cone_angle(double a, double b, double c);

// Equal-angle specialization: cos(theta/2) = -(2 cosh^2 phi + sinh^2 phi) /
// (2 cosh^3 phi), a strictly increasing bijection (0, inf) -> (-1, 0).
double equal_angle_cos_half_theta(double phi);

// |sinh(a+b) sinh(b+c) - sinh a sinh c - sinh b sinh(a+b+c)|, normalized by
// max(1, |sinh b sinh(a+b+c)|).
double sinh_identity_residual(double a, double b, double c);

// Reversing the angle order; an isometry of the glued space.
std::vector<double> involution(const std::vector<double>& phis);

} // namespace tconvex
