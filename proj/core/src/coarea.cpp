#include "tconvex/coarea.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace tconvex {

GramMatrix::GramMatrix(std::vector<double> phis, std::vector<double> entries)
    : phis_(std::move(phis)), entries_(std::move(entries)) {
    if (entries_.size() != phis_.size() * phis_.size())
        throw DimensionMismatch("GramMatrix: entry count must be n*n");
}

GramMatrix gram(const std::vector<double>& phis) {
    const std::size_t n = phis.size();
    if (n < 2)
        throw BadAngle("gram: need n >= 2 (n = 1 has a scalar closed form)");
    for (double p : phis)
        if (!std::isfinite(p) || p < kPhiMin)
            throw BadAngle("gram: angles must be finite and >= 1e-8");

    std::vector<double> e(n * n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t next = (k + 1) % n;
        const double s = std::sinh(phis[k]);
        const double c = std::cosh(phis[k]);
        // The angle phi_k joins edges k and k+1: it contributes coth phi_k / 2
        // to both touching diagonal entries and -1/(2 sinh phi_k) to the
        // adjacency, accumulated so the n = 2 double adjacency sums up.
        e[k * n + k] += 0.5 * c / s;
        e[next * n + next] += 0.5 * c / s;
        e[k * n + next] += -0.5 / s;
        e[next * n + k] += -0.5 / s;
    }
    return GramMatrix(phis, std::move(e));
}

double mixed_coarea(const GramMatrix& g, const std::vector<double>& h,
                    const std::vector<double>& k) {
    const std::size_t n = g.n();
    if (h.size() != n || k.size() != n)
        throw DimensionMismatch("mixed_coarea: vector length must match the form");
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        // Parenthesized so the rounding is identical under h <-> k.
        s += g.at(i, i) * (h[i] * k[i]);
        for (std::size_t j = i + 1; j < n; ++j)
            s += g.at(i, j) * (h[i] * k[j] + h[j] * k[i]);
    }
    return s;
}

DefinitenessReport is_positive_definite(const GramMatrix& g) {
    const std::size_t n = g.n();
    DefinitenessReport rep;

    rep.dominance_margin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        double off = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != k) off += std::abs(g.at(k, j));
        rep.dominance_margin = std::min(rep.dominance_margin, g.at(k, k) - off);
    }

    // LDL^T without pivoting; succeeds iff the matrix is positive definite.
    std::vector<double> L(n * n, 0.0);
    std::vector<double> D(n, 0.0);
    rep.factorization_ok = true;
    rep.min_pivot = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n && rep.factorization_ok; ++j) {
        double d = g.at(j, j);
        for (std::size_t k = 0; k < j; ++k)
            d -= L[j * n + k] * L[j * n + k] * D[k];
        if (!(d > 0.0)) {
            rep.factorization_ok = false;
            rep.min_pivot = d;
            break;
        }
        D[j] = d;
        rep.min_pivot = std::min(rep.min_pivot, d);
        for (std::size_t i = j + 1; i < n; ++i) {
            double v = g.at(i, j);
            for (std::size_t k = 0; k < j; ++k)
                v -= L[i * n + k] * L[j * n + k] * D[k];
            L[i * n + j] = v / d;
        }
    }

    rep.positive_definite = rep.factorization_ok && rep.dominance_margin > 0.0;
    return rep;
}

std::vector<double> edge_lengths_from_gram(const GramMatrix& g,
                                           const std::vector<double>& h) {
    const std::size_t n = g.n();
    if (h.size() != n)
        throw DimensionMismatch("edge_lengths_from_gram: vector length mismatch");
    std::vector<double> ell(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += g.at(i, j) * h[j];
        ell[i] = 2.0 * s;
    }
    return ell;
}

namespace {

void require_in_cone(const GramMatrix& g, const std::vector<double>& h,
                     const char* who) {
    double hmax = 0.0;
    for (double v : h) hmax = std::max(hmax, std::abs(v));
    const double eps = 1e-12 * std::max(1.0, hmax);
    for (double l : edge_lengths_from_gram(g, h))
        if (!(l > eps))
            throw NotTConvex(std::string(who) +
                             ": support vector outside the open cone");
}

} // namespace

MinkowskiReport reversed_minkowski(const GramMatrix& g,
                                   const std::vector<double>& hP,
                                   const std::vector<double>& hQ) {
    require_in_cone(g, hP, "reversed_minkowski");
    require_in_cone(g, hQ, "reversed_minkowski");
    MinkowskiReport rep;
    const double m = mixed_coarea(g, hP, hQ);
    rep.lhs = m * m;
    rep.rhs = mixed_coarea(g, hP, hP) * mixed_coarea(g, hQ, hQ);
    rep.equality = 1.0 - rep.lhs / rep.rhs <= 1e-9;
    return rep;
}

std::vector<double> normalize_unit_coarea(const GramMatrix& g,
                                          const std::vector<double>& h) {
    const double c = mixed_coarea(g, h, h);
    if (!(c > 0.0))
        throw NonpositiveCoarea("normalize_unit_coarea: coarea must be positive");
    const double s = std::sqrt(c);
    std::vector<double> out(h);
    for (double& v : out) v /= s;
    return out;
}

} // namespace tconvex
