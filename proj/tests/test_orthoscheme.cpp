#include "doctest.h"

#include "tconvex/checks.hpp"
#include "tconvex/orthoscheme.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

using namespace tconvex;

namespace {

std::vector<double> random_angles(Rng& rng, int n, double lo = 0.05,
                                  double hi = 1.5) {
    std::vector<double> phis(n);
    for (double& p : phis) p = rng.uniform(lo, hi);
    return phis;
}

} // namespace

TEST_CASE("dihedral cosines: equal-angle closed form and frozen values") {
    const double a = 0.8;
    const OrthoschemeAngles eq = dihedral_cosines({a, a, a, a});
    for (double c : eq.dihedral_cos)
        CHECK(c == doctest::Approx(0.5 / std::cosh(a)).epsilon(1e-15));

    const OrthoschemeAngles o = dihedral_cosines({0.3, 0.4, 0.5});
    REQUIRE(o.n == 3);
    CHECK(o.dihedral_cos[0] == doctest::Approx(0.56365640241588242).epsilon(1e-14));
    CHECK(o.dihedral_cos[1] == doctest::Approx(0.45142117963495378).epsilon(1e-14));
    CHECK(o.dihedral_cos[2] == doctest::Approx(0.37041001691871556).epsilon(1e-14));

    CHECK_THROWS_AS(dihedral_cosines({0.3, 0.4}), TooFewFacets);
    CHECK_THROWS_AS(dihedral_cosines({0.3, 0.4, -0.1}), BadAngle);
}

TEST_CASE("dihedral cosine triple is symmetric in the outer angles") {
    Rng rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        const double x = rng.uniform(0.05, 2.0);
        const double y = rng.uniform(0.05, 2.0);
        const double z = rng.uniform(0.05, 2.0);
        CHECK(dihedral_cos_sq_triple(x, y, z) ==
              doctest::Approx(dihedral_cos_sq_triple(z, y, x)).epsilon(1e-15));
    }
}

TEST_CASE("closed form and Gram path agree") {
    Rng rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.uniform_int(3, 10);
        const std::vector<double> phis = random_angles(rng, n);
        const OrthoschemeAngles o = dihedral_cosines(phis);
        const std::vector<double> from_gram = dihedral_cosines_from_gram(phis);
        for (int k = 0; k < n; ++k) {
            CHECK(o.dihedral_cos[k] > 0.0);
            CHECK(o.dihedral_cos[k] < 1.0);
            CHECK(std::abs(o.dihedral_cos[k] - from_gram[k]) <= 1e-12);
        }
    }
}

TEST_CASE("orthogonality structure of the facets") {
    const OrthoschemeAngles o = dihedral_cosines({0.3, 0.4, 0.5, 0.6, 0.7});
    CHECK_FALSE(o.facets_orthogonal(0, 0));
    CHECK_FALSE(o.facets_orthogonal(0, 1)); // adjacent: acute, not right
    CHECK_FALSE(o.facets_orthogonal(0, 4)); // cyclically adjacent
    CHECK(o.facets_orthogonal(0, 2));
    CHECK(o.facets_orthogonal(1, 3));
    CHECK(o.facets_orthogonal(2, 4));
}

TEST_CASE("n = 2 arc length") {
    // Equal angles: cos theta = 1/cosh a.
    for (double a : {0.3, 0.9, 1.7})
        CHECK(arc_length_n2(a, a) ==
              doctest::Approx(std::acos(1 / std::cosh(a))).epsilon(1e-14));

    CHECK(arc_length_n2(0.7, 1.1) ==
          doctest::Approx(0.77874283304713477).epsilon(1e-14));

    Rng rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const double p1 = rng.uniform(0.05, 2.5);
        const double p2 = rng.uniform(0.05, 2.5);
        const double th = arc_length_n2(p1, p2);
        CHECK(th > 0.0);
        CHECK(th < std::acos(0.0)); // pi/2
        CHECK(th == arc_length_n2(p2, p1));
    }

    CHECK_THROWS_AS(arc_length_n2(1e-9, 0.5), BadAngle);
}

TEST_CASE("cross-ratio: frozen values and the dihedral identity") {
    // Equal angles: lambda = 1/(1 - c^2) with c = 1/(2 cosh a).
    const CrossRatioWitness eq = cross_ratio({0.6, 0.6, 0.6}, 1);
    CHECK(eq.lambda == doctest::Approx(1.2163888063070237).epsilon(1e-14));

    const std::vector<double> phis{0.3, 0.4, 0.5};
    const double frozen[3] = {1.4656492988746453, 1.2559359953255237,
                              1.1590219634134539};
    const OrthoschemeAngles o = dihedral_cosines(phis);
    for (std::size_t k = 0; k < 3; ++k) {
        const CrossRatioWitness w = cross_ratio(phis, k);
        CHECK(w.k == k);
        CHECK(w.lambda == doctest::Approx(frozen[k]).epsilon(1e-14));
        CHECK(w.lambda > 1.0);
        for (int m = 0; m < 3; ++m) CHECK(w.u[m] < w.u[m + 1]);
        const double c2 = o.dihedral_cos[k] * o.dihedral_cos[k];
        CHECK(std::abs((w.lambda - 1) / w.lambda - c2) <= 1e-12);
    }

    CHECK_THROWS_AS(cross_ratio({0.3, 0.4}, 0), TooFewFacets);
    CHECK_THROWS_AS(cross_ratio(phis, 3), BadInput);
    CHECK_THROWS_AS(cross_ratio(phis, 0, -1.0), BadInput);
}

TEST_CASE("cross-ratio is independent of the transversal height") {
    Rng rng(73);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = rng.uniform_int(3, 8);
        const std::vector<double> phis = random_angles(rng, n);
        const std::size_t k =
            static_cast<std::size_t>(rng.uniform_int(0, n - 1));
        const CrossRatioWitness w1 = cross_ratio(phis, k, 1.0);
        const CrossRatioWitness w2 = cross_ratio(phis, k, 2.0);
        CHECK(std::abs(w1.lambda - w2.lambda) <= 1e-12);
        // The witness points themselves scale linearly with the height.
        for (int m = 0; m < 4; ++m)
            CHECK(w2.u[m] == doctest::Approx(2 * w1.u[m]).epsilon(1e-15));
    }
}

TEST_CASE("chain step: the artanh closed form inverts the triple relation") {
    Rng rng(79);
    for (int trial = 0; trial < 100; ++trial) {
        const double p1 = rng.uniform(0.1, 2.0);
        const double p2 = rng.uniform(0.1, 2.0);
        const double p3 = rng.uniform(0.1, 2.0);
        const double A = dihedral_cos_sq_triple(p1, p2, p3);
        const double S = std::sinh(p1 + p2);
        const double x =
            std::atanh(A * S * std::sinh(p2) /
                       (std::sinh(p1) - A * S * std::cosh(p2)));
        CHECK(x == doctest::Approx(p3).epsilon(1e-10));
        // Defining relation, residual form.
        const double res = A * S * std::sinh(p2 + x) - std::sinh(p1) * std::sinh(x);
        CHECK(std::abs(res) <= 1e-12);
    }
}

TEST_CASE("solve_angles_from_dihedral: round trips") {
    // Known instance: recover (0.3, 0.5, 0.7) up to rotation/reversal.
    const std::vector<double> target{0.3, 0.5, 0.7};
    const OrthoschemeAngles to = dihedral_cosines(target);
    std::vector<double> A(3);
    for (int k = 0; k < 3; ++k) A[k] = to.dihedral_cos[k] * to.dihedral_cos[k];
    const std::vector<double> got = solve_angles_from_dihedral(A);
    REQUIRE(got.size() == 3);
    std::vector<double> sorted_got(got), sorted_target(target);
    std::sort(sorted_got.begin(), sorted_got.end());
    std::sort(sorted_target.begin(), sorted_target.end());
    for (int k = 0; k < 3; ++k)
        CHECK(sorted_got[k] == doctest::Approx(sorted_target[k]).epsilon(1e-6));

    // Equal-angle case.
    const double a = 0.8;
    const double c = 0.5 / std::cosh(a);
    const std::vector<double> eq =
        solve_angles_from_dihedral({c * c, c * c, c * c, c * c});
    for (double p : eq) CHECK(p == doctest::Approx(a).epsilon(1e-6));

    CHECK_THROWS_AS(solve_angles_from_dihedral({1.2, 0.5, 0.5}), BadInput);
    CHECK_THROWS_AS(solve_angles_from_dihedral({0.0, 0.5, 0.5}), BadInput);
    CHECK_THROWS_AS(solve_angles_from_dihedral({0.5, 0.5}), BadInput);
}

TEST_CASE("solve_angles_from_dihedral: random sweep") {
    Rng rng(83);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.uniform_int(3, 8);
        const std::vector<double> phis = random_angles(rng, n);
        const OrthoschemeAngles o = dihedral_cosines(phis);
        std::vector<double> A(n);
        for (int k = 0; k < n; ++k)
            A[k] = o.dihedral_cos[k] * o.dihedral_cos[k];
        const std::vector<double> got = solve_angles_from_dihedral(A);
        const OrthoschemeAngles check = dihedral_cosines(got);
        for (int k = 0; k < n; ++k)
            CHECK(std::abs(check.dihedral_cos[k] * check.dihedral_cos[k] - A[k]) <=
                  1e-6);
    }
}
