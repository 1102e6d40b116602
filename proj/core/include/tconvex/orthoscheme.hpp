#pragma once

#include "tconvex/coarea.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace tconvex {

// Dihedral data of the spherical orthoscheme carved out of the unit sphere
// of the coarea form by the support cone. Facet k meets facets k+-1 (cyclic)
// at an acute angle; every other facet pair is orthogonal.
struct OrthoschemeAngles {
    std::size_t n = 0;
    // dihedral_cos[k] has middle angle phi_k and outer angles phi_{k-1},
    // phi_{k+1}; it belongs to the facet pair (k, k+1 mod n).
    std::vector<double> dihedral_cos;

    // The orthogonality structure: true for every non-adjacent pair.
    bool facets_orthogonal(std::size_t j, std::size_t k) const {
        if (j == k) return false;
        const std::size_t d = (j + n - k) % n;
        return d != 1 && d != n - 1;
    }
};

// Witness that the dihedral cosine c_k is a projective invariant: the four
// timelike lines through eta_{k-1}..eta_{k+2}, cut by a horizontal
// transversal, have cross-ratio lambda with (lambda-1)/lambda = c_k^2.
struct CrossRatioWitness {
    std::size_t k = 0;
    double lambda = 0.0;
    std::array<double, 4> u{}; // transversal coordinates, strictly increasing
};

// cos^2 of the dihedral angle with middle angle y and outer angles x, z:
// sinh x sinh z / (sinh(x+y) sinh(y+z)). Symmetric in (x, z).
double dihedral_cos_sq_triple(double x, double y, double z);

// Closed-form dihedral cosines, cross-checked internally against the
// Gram-matrix path (-G[k][k+1]/sqrt(G[k][k] G[k+1][k+1])) to 1e-12.
OrthoschemeAngles dihedral_cosines(const std::vector<double>& phis);

// The Gram-matrix side on its own, for two-path comparisons in tests.
std::vector<double> dihedral_cosines_from_gram(const std::vector<double>& phis);

// For n = 2 the unit-coarea slice of the support cone is a circular arc; its
// length is the angle between the two boundary rays (where l_1 = 0 and
// l_2 = 0) measured in the coarea form, which reduces to
// arccos(-G[1][2]/sqrt(G[1][1] G[2][2])) because the n = 2 diagonal entries
// coincide. Evaluates to cos(theta) = (sinh phi_1 + sinh phi_2)/sinh(phi_1+phi_2),
// symmetric under swapping the edges (the asymmetric variant
// sinh phi_2 / sinh(phi_1+phi_2) sometimes quoted for this arc is not what
// the form gives and is not asserted anywhere).
double arc_length_n2(double phi1, double phi2);

// Cross-ratio of the lines spanned by eta_{k-1}, eta_k, eta_{k+1}, eta_{k+2}
// (k is 0-based, cyclically extended), computed on the transversal
// {x2 = transversal_height}.
CrossRatioWitness cross_ratio(const std::vector<double>& phis, std::size_t k,
                              double transversal_height = 1.0);

// Invert the dihedral data: find angles phi with
// dihedral_cosines(phi)[k]^2 = A[k] for all k.
//
// Stage 1 seeds (phi_1, phi_2) and unrolls the chain: A_k relates three
// consecutive angles and is linear in (sinh phi_{k+2}, cosh phi_{k+2}), so
// each next angle is an artanh away. Stage 2 closes the two leftover cyclic
// constraints with a damped 2-D Newton on the seeds, multi-started over
// {0.25, 0.5, 1, 2}^2. The chain is a shooting method, exponentially
// sensitive to the seeds, so for larger n a Stage 3 runs a full
// n-dimensional damped Newton (analytic Jacobian) from the equal-angle
// initialization phi_k = acosh(max(1, 1/(2 sqrt(A_k)))).
std::vector<double> solve_angles_from_dihedral(const std::vector<double>& A);

} // namespace tconvex
