#pragma once

#include "tconvex/polygon.hpp"

#include <cstddef>
#include <vector>

namespace tconvex {

// Matrix of the coarea bilinear form in the basis of support numbers, for a
// fixed angle vector. Symmetric; for n >= 3 only the diagonal and the cyclic
// off-diagonals are nonzero.
class GramMatrix {
public:
    GramMatrix(std::vector<double> phis, std::vector<double> entries);

    std::size_t n() const noexcept { return phis_.size(); }
    const std::vector<double>& phis() const noexcept { return phis_; }
    double at(std::size_t k, std::size_t j) const {
        return entries_[k * n() + j];
    }
    const std::vector<double>& entries() const noexcept { return entries_; }

private:
    std::vector<double> phis_;
    std::vector<double> entries_; // row-major n*n
};

struct DefinitenessReport {
    double dominance_margin = 0.0; // min_k (G[k][k] - sum_{j!=k} |G[k][j]|)
    double min_pivot = 0.0;        // smallest D entry of the LDL^T factorization
    bool factorization_ok = false; // all pivots strictly positive
    bool positive_definite = false; // both certificates pass
};

struct MinkowskiReport {
    double lhs = 0.0; // mixed(hP,hQ)^2
    double rhs = 0.0; // coarea(hP) * coarea(hQ)
    bool equality = false; // 1 - lhs/rhs <= 1e-9 (homothetic pair)
};

// Entries: G[k][k] = (coth phi_{k-1} + coth phi_k)/2,
// G[k][k+-1] += -1/(2 sinh phi) for the joining angle, cyclic. The += matters
// for n = 2, where both adjacencies land on the single off-diagonal entry.
// n = 1 is excluded; its coarea has the scalar closed form h^2(cosh t - 1)/sinh t.
GramMatrix gram(const std::vector<double>& phis);

// h^T G k, evaluated in an order symmetric in (h, k) so that
// mixed_coarea(G,h,k) == mixed_coarea(G,k,h) bitwise.
double mixed_coarea(const GramMatrix& g, const std::vector<double>& h,
                    const std::vector<double>& k);

// Positive definiteness certified two ways: strict diagonal dominance margin
// and an LDL^T factorization with all pivots positive. Failures are reported,
// not thrown.
DefinitenessReport is_positive_definite(const GramMatrix& g);

// Edge lengths from the form: l_i(h) = 2 (G h)_i.
std::vector<double> edge_lengths_from_gram(const GramMatrix& g,
                                           const std::vector<double>& h);

// coarea(P,Q)^2 <= coarea(P) coarea(Q), equality iff P, Q homothetic.
// Both support vectors must lie in the open cone (all edge lengths positive).
MinkowskiReport reversed_minkowski(const GramMatrix& g,
                                   const std::vector<double>& hP,
                                   const std::vector<double>& hQ);

// h / sqrt(h^T G h): the representative on the unit sphere of the coarea form.
std::vector<double> normalize_unit_coarea(const GramMatrix& g,
                                          const std::vector<double>& h);

} // namespace tconvex
