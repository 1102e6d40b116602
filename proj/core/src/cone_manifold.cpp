#include "tconvex/cone_manifold.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tconvex {

ChartSet::ChartSet(std::vector<double> phis,
                   std::vector<std::vector<std::size_t>> orders)
    : phis_(std::move(phis)), orders_(std::move(orders)) {}

std::vector<double> ChartSet::angles(std::size_t chart) const {
    const auto& order = orders_.at(chart);
    std::vector<double> out;
    out.reserve(order.size());
    for (std::size_t idx : order) out.push_back(phis_[idx]);
    return out;
}

ChartSet enumerate_charts(const std::vector<double>& phis) {
    const std::size_t n = phis.size();
    if (n < 3)
        throw TooFewFacets("enumerate_charts: need n >= 3");
    for (double p : phis)
        if (!std::isfinite(p) || p < kPhiMin)
            throw BadAngle("enumerate_charts: angles must be finite and >= 1e-8");

    // Fixing index 0 in front picks the lexicographically smallest rotation
    // of each cyclic class, so the remaining (n-1)! permutations enumerate
    // the classes exactly once.
    std::vector<std::size_t> tail(n - 1);
    std::iota(tail.begin(), tail.end(), 1);
    std::vector<std::vector<std::size_t>> orders;
    do {
        std::vector<std::size_t> order;
        order.reserve(n);
        order.push_back(0);
        order.insert(order.end(), tail.begin(), tail.end());
        orders.push_back(std::move(order));
    } while (std::next_permutation(tail.begin(), tail.end()));
    return ChartSet(phis, std::move(orders));
}

namespace {

bool cyclically_adjacent(const std::vector<std::size_t>& order, std::size_t a,
                         std::size_t b) {
    const std::size_t n = order.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        if ((order[i] == a && order[j] == b) || (order[i] == b && order[j] == a))
            return true;
    }
    return false;
}

} // namespace

std::vector<std::size_t> adjacency_charts(const ChartSet& charts,
                                          std::array<std::size_t, 2> merge1,
                                          std::array<std::size_t, 2> merge2) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < charts.size(); ++c) {
        const auto& order = charts.orders()[c];
        if (cyclically_adjacent(order, merge1[0], merge1[1]) &&
            cyclically_adjacent(order, merge2[0], merge2[1]))
            out.push_back(c);
    }
    return out;
}

double n_face_total_angle() {
    return 4.0 * std::acos(0.0);
}

ConeAngleReport n_face_report() {
    ConeAngleReport rep;
    rep.face_type = FaceType::N;
    rep.theta_sum = n_face_total_angle();
    rep.theta_closed = rep.theta_sum;
    rep.cos_half_theta = 0.0; // every contributing dihedral angle is right
    return rep;
}

ConeAngleReport s_cone_angle(double a, double b, double c) {
    for (double v : {a, b, c})
        if (!std::isfinite(v) || v < kPhiMin)
            throw BadAngle("s_cone_angle: angles must be finite and >= 1e-8");

    ConeAngleReport rep;
    rep.merged_triple = {a, b, c};
    rep.face_type = FaceType::S;

    // Six orderings of the triple pair up by the outer-swap symmetry of the
    // dihedral cosine, leaving one distinct angle per middle element.
    const double th_a = std::acos(std::sqrt(dihedral_cos_sq_triple(b, a, c)));
    const double th_b = std::acos(std::sqrt(dihedral_cos_sq_triple(a, b, c)));
    const double th_c = std::acos(std::sqrt(dihedral_cos_sq_triple(a, c, b)));
    rep.theta_sum = 2.0 * (th_a + th_b + th_c);

    const double sa = std::sinh(a), sb = std::sinh(b), sc = std::sinh(c);
    const double num =
        sa * sb * sc - std::sinh(a + b + c) * (sa * sb + sb * sc + sc * sa);
    const double den =
        std::sinh(a + b) * std::sinh(b + c) * std::sinh(c + a);
    double r = num / den;
    r = std::clamp(r, -1.0, 1.0); // roundoff guard near the phi -> 0 limit
    rep.cos_half_theta = r;
    const double pi = std::acos(-1.0);
    rep.theta_closed = 4.0 * pi - 2.0 * std::acos(r);
    return rep;
}

double equal_angle_cos_half_theta(double phi) {
    const double ch = std::cosh(phi);
    const double sh = std::sinh(phi);
    return -(2.0 * ch * ch + sh * sh) / (2.0 * ch * ch * ch);
}

double sinh_identity_residual(double a, double b, double c) {
    const double lhs =
        std::sinh(a + b) * std::sinh(b + c) - std::sinh(a) * std::sinh(c);
    const double rhs = std::sinh(b) * std::sinh(a + b + c);
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

std::vector<double> involution(const std::vector<double>& phis) {
    return std::vector<double>(phis.rbegin(), phis.rend());
}

} // namespace tconvex
