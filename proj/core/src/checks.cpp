#include "tconvex/checks.hpp"

#include "tconvex/coarea.hpp"
#include "tconvex/cone_manifold.hpp"
#include "tconvex/orthoscheme.hpp"
#include "tconvex/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <unistd.h>

namespace tconvex {

namespace {

std::string fmt_sci(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3e", x);
    return std::string(buf);
}

std::vector<double> random_angles(Rng& rng, int n, double lo, double hi) {
    std::vector<double> phis(static_cast<std::size_t>(n));
    for (double& p : phis) p = rng.uniform(lo, hi);
    return phis;
}

const double kPi = std::acos(-1.0);

} // namespace

PolygonSpec random_interior_spec(Rng& rng, int n_lo, int n_hi, double phi_lo,
                                 double phi_hi) {
    const int n = rng.uniform_int(n_lo, n_hi);
    std::vector<double> phis = random_angles(rng, n, phi_lo, phi_hi);
    std::vector<double> delta(static_cast<std::size_t>(n));
    for (double& d : delta) d = rng.uniform(-1.0, 1.0);
    double s = 0.5;
    for (int attempt = 0; attempt < 60; ++attempt, s *= 0.5) {
        std::vector<double> hs(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < hs.size(); ++i) hs[i] = 1.0 + s * delta[i];
        PolygonSpec spec(phis, hs);
        if (is_t_convex(spec).t_convex) return spec;
    }
    // Equal support numbers are interior for every valid angle vector.
    return PolygonSpec(phis, std::vector<double>(static_cast<std::size_t>(n), 1.0));
}

namespace {

CheckResult check_coarea_oracle(Rng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const PolygonSpec spec = random_interior_spec(rng, 1, 10);
        const double a = coarea_formula(spec);
        const double b = coarea_geometric(spec);
        worst = std::max(worst, std::abs(a - b) / b);
    }
    return {"coarea_oracle_equivalence", worst <= 1e-9,
            "max relative gap " + fmt_sci(worst) + " over 1000 specs"};
}

CheckResult check_n1_closed_form(Rng&) {
    const double t0 = std::asinh(1.0);
    const PolygonSpec spec({t0}, {1.0});
    const double want = std::sqrt(2.0) - 1.0;
    const double gap = std::max(std::abs(coarea_formula(spec) - want),
                                std::abs(coarea_geometric(spec) - want));
    return {"n1_closed_form", gap <= 1e-12,
            "both paths vs sqrt(2)-1, gap " + fmt_sci(gap)};
}

CheckResult check_definiteness(Rng& rng) {
    double min_margin = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = rng.uniform_int(2, 12);
        const GramMatrix g = gram(random_angles(rng, n, 0.05, 1.5));
        const DefinitenessReport rep = is_positive_definite(g);
        ok = ok && rep.positive_definite;
        min_margin = std::min(min_margin, rep.dominance_margin);
    }
    return {"gram_positive_definite", ok && min_margin > 0.0,
            "500 angle vectors, min dominance margin " + fmt_sci(min_margin)};
}

CheckResult check_reversed_minkowski(Rng& rng) {
    bool ok = true;
    double worst_slack = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 1000; ++trial) {
        const PolygonSpec spec = random_interior_spec(rng, 2, 10);
        std::vector<double> hQ(spec.n());
        // Second interior vector for the same angles.
        std::vector<double> delta(spec.n());
        for (double& d : delta) d = rng.uniform(-1.0, 1.0);
        double s = 0.5;
        const GramMatrix g = gram(spec.phis());
        for (int attempt = 0; attempt < 60; ++attempt, s *= 0.5) {
            for (std::size_t i = 0; i < hQ.size(); ++i) hQ[i] = 1.0 + s * delta[i];
            bool inside = true;
            for (double l : edge_lengths_from_gram(g, hQ))
                if (!(l > 1e-12)) inside = false;
            if (inside) break;
        }
        const MinkowskiReport rep = reversed_minkowski(g, spec.hs(), hQ);
        const double slack = (rep.rhs - rep.lhs) / rep.rhs;
        worst_slack = std::min(worst_slack, slack);
        if (slack < -1e-12) ok = false;

        if (trial % 10 == 0) {
            // Homothetic pair must be flagged as the equality case.
            const double lambda = rng.uniform(0.5, 3.0);
            std::vector<double> hScaled(spec.hs());
            for (double& v : hScaled) v *= lambda;
            if (!reversed_minkowski(g, spec.hs(), hScaled).equality) ok = false;
        }
    }
    return {"reversed_minkowski", ok,
            "1000 cone pairs, min normalized slack " + fmt_sci(worst_slack)};
}

CheckResult check_dihedral_two_path(Rng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = rng.uniform_int(3, 10);
        const std::vector<double> phis = random_angles(rng, n, 0.05, 1.5);
        const OrthoschemeAngles oa = dihedral_cosines(phis);
        const std::vector<double> lhs = dihedral_cosines_from_gram(phis);
        for (std::size_t k = 0; k < phis.size(); ++k)
            worst = std::max(worst, std::abs(oa.dihedral_cos[k] - lhs[k]));
    }
    return {"dihedral_two_path_agreement", worst <= 1e-12,
            "500 angle vectors, max |closed - gram| " + fmt_sci(worst)};
}

CheckResult check_cross_ratio(Rng& rng) {
    double worst = 0.0;
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.uniform_int(3, 10);
        const std::vector<double> phis = random_angles(rng, n, 0.05, 1.5);
        const OrthoschemeAngles oa = dihedral_cosines(phis);
        for (std::size_t k = 0; k < phis.size(); ++k) {
            const double c2 = oa.dihedral_cos[k] * oa.dihedral_cos[k];
            for (double height : {1.0, 2.0}) {
                const CrossRatioWitness w = cross_ratio(phis, k, height);
                if (!(w.lambda > 1.0)) ok = false;
                worst = std::max(worst,
                                 std::abs((w.lambda - 1.0) / w.lambda - c2));
            }
        }
    }
    return {"cross_ratio_identity", ok && worst <= 1e-9,
            "200 angle vectors at two transversals, max gap " + fmt_sci(worst)};
}

CheckResult check_inverse_round_trip(Rng& rng) {
    int failures = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.uniform_int(3, 8);
        const std::vector<double> phis = random_angles(rng, n, 0.05, 1.5);
        const OrthoschemeAngles oa = dihedral_cosines(phis);
        std::vector<double> A(oa.dihedral_cos);
        for (double& a : A) a *= a;
        try {
            const std::vector<double> solved = solve_angles_from_dihedral(A);
            const OrthoschemeAngles back = dihedral_cosines(solved);
            for (std::size_t k = 0; k < A.size(); ++k)
                worst = std::max(worst, std::abs(back.dihedral_cos[k] -
                                                 oa.dihedral_cos[k]));
        } catch (const Error&) {
            ++failures;
        }
    }
    return {"inverse_solver_round_trip", failures == 0 && worst <= 1e-6,
            "100 sweeps, failures " + std::to_string(failures) +
                ", max cosine gap " + fmt_sci(worst)};
}

CheckResult check_cone_angle(Rng& rng) {
    bool ok = true;
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double a = rng.uniform(0.05, 2.0);
        const double b = rng.uniform(0.05, 2.0);
        const double c = rng.uniform(0.05, 2.0);
        const ConeAngleReport rep = s_cone_angle(a, b, c);
        worst = std::max(worst, std::abs(rep.theta_sum - rep.theta_closed));
        if (!(rep.theta_closed > 2.0 * kPi && rep.theta_closed < 3.0 * kPi))
            ok = false;
    }
    // Equal-angle closed form and its monotone range.
    double eq_gap = 0.0;
    double prev = -2.0;
    bool monotone = true;
    for (int i = 0; i < 100; ++i) {
        const double phi = 0.05 + 0.05 * i; // 0.05 .. 5.0
        const double r = equal_angle_cos_half_theta(phi);
        eq_gap = std::max(eq_gap,
                          std::abs(s_cone_angle(phi, phi, phi).cos_half_theta - r));
        if (!(r > -1.0 && r < 0.0) || !(r > prev)) monotone = false;
        prev = r;
    }
    return {"cone_angle_two_path", ok && worst <= 1e-9 && eq_gap <= 1e-12 && monotone,
            "max |sum - closed| " + fmt_sci(worst) + ", equal-angle gap " +
                fmt_sci(eq_gap) + (monotone ? ", monotone" : ", NOT monotone")};
}

CheckResult check_sinh_identity(Rng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double a = rng.uniform(-3.0, 3.0);
        const double b = rng.uniform(-3.0, 3.0);
        const double c = rng.uniform(-3.0, 3.0);
        worst = std::max(worst, sinh_identity_residual(a, b, c));
    }
    return {"sinh_identity", worst <= 1e-12,
            "1000 triples in [-3,3]^3, max residual " + fmt_sci(worst)};
}

CheckResult check_invariance_suite(Rng& rng) {
    double worst_iso = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        // Future timelike vectors: radius times a point of the unit hyperbola.
        // The angular separation is kept >= 0.05 because the acosh inside
        // langle is infinitely ill-conditioned in absolute terms as the
        // vectors become proportional; within this range the invariance gap
        // is bounded by ~eps * cosh(5)^2 / sinh(0.05) < 1e-10.
        const double rx = rng.uniform(0.1, 3.0);
        const double psi_x = rng.uniform(-2.0, 2.0);
        const LVec fx{rx * std::sinh(psi_x), rx * std::cosh(psi_x)};
        const double ry = rng.uniform(0.1, 3.0);
        const double sep = rng.uniform(0.05, 2.0);
        const double psi_y = trial % 2 == 0 ? psi_x + sep : psi_x - sep;
        const LVec fy{ry * std::sinh(psi_y), ry * std::cosh(psi_y)};
        const double t = rng.uniform(-3.0, 3.0);
        worst_iso = std::max(
            worst_iso, std::abs(langle(hyp_translate(t, fx), hyp_translate(t, fy)) -
                                langle(fx, fy)));
        const LVec v{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
        const LVec w{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
        worst_iso = std::max(
            worst_iso, std::abs(lprod(hyp_translate(t, v), hyp_translate(t, w)) -
                                lprod(v, w)));
    }

    double worst_group = 0.0;
    double worst_homog = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const PolygonSpec spec = random_interior_spec(rng, 1, 8);
        const std::vector<LVec> v = vertices(spec);
        // Next fundamental period, built from the translated support lines
        // (normal angles shifted by t; the wrap edge shifts by 2t).
        const auto& h = spec.hs();
        const std::size_t n = spec.n();
        const double t = spec.t();
        std::vector<double> psi(n);
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            psi[i] = acc;
            acc += spec.phis()[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double psi2 = i + 1 < n ? psi[i + 1] + t : psi[0] + 2.0 * t;
            const LVec next =
                support_vertex(psi[i] + t, h[i], psi2, h[(i + 1) % n]);
            const LVec want = hyp_translate(t, v[i]);
            const double scale =
                std::max({1.0, std::abs(want.x1), std::abs(want.x2)});
            worst_group = std::max(worst_group,
                                   std::max(std::abs(next.x1 - want.x1),
                                            std::abs(next.x2 - want.x2)) /
                                       scale);
        }

        const double lambda = rng.uniform(0.1, 10.0);
        std::vector<double> scaled(spec.hs());
        for (double& s : scaled) s *= lambda;
        const double c1 = coarea_formula(spec);
        const double c2 = coarea_formula(PolygonSpec(spec.phis(), scaled));
        worst_homog =
            std::max(worst_homog, std::abs(c2 - lambda * lambda * c1) /
                                      (lambda * lambda * c1));
    }

    double worst_conj = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.uniform_int(2, 10);
        const std::vector<double> phis = random_angles(rng, n, 0.05, 1.5);
        const int r = rng.uniform_int(0, n - 1);
        std::vector<double> rotated(phis.size());
        for (std::size_t k = 0; k < phis.size(); ++k)
            rotated[k] = phis[(k + static_cast<std::size_t>(r)) % phis.size()];
        const GramMatrix g = gram(phis);
        const GramMatrix gr = gram(rotated);
        for (std::size_t k = 0; k < phis.size(); ++k)
            for (std::size_t j = 0; j < phis.size(); ++j)
                worst_conj = std::max(
                    worst_conj,
                    std::abs(gr.at(k, j) -
                             g.at((k + static_cast<std::size_t>(r)) % phis.size(),
                                  (j + static_cast<std::size_t>(r)) % phis.size())));
    }

    const bool ok = worst_iso <= 1e-10 && worst_group <= 1e-10 &&
                    worst_homog <= 1e-12 && worst_conj <= 1e-14;
    return {"invariance_suite", ok,
            "isometry " + fmt_sci(worst_iso) + ", group " + fmt_sci(worst_group) +
                ", homogeneity " + fmt_sci(worst_homog) + ", relabeling " +
                fmt_sci(worst_conj)};
}

std::string read_file_bytes(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

CheckResult check_cli_determinism(const CheckOptions& opts) {
    const double t0 = std::asinh(1.0);
    const PolygonSpec spec({t0}, {1.0});

    // Boundary over 3 fundamental periods: every edge must have the same
    // Lorentzian length (the picture with one edge orbit).
    const std::vector<LVec> chain = boundary_chain(spec, 3);
    double lmin = std::numeric_limits<double>::infinity();
    double lmax = 0.0;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const LVec d{chain[i + 1].x1 - chain[i].x1, chain[i + 1].x2 - chain[i].x2};
        const double len = std::sqrt(lprod(d, d));
        lmin = std::min(lmin, len);
        lmax = std::max(lmax, len);
    }
    const bool edges_equal = lmax - lmin <= 1e-12;

    bool identical = false;
    std::string how;
    if (opts.cli_path.empty()) {
        identical = render_svg(spec, 3) == render_svg(spec, 3);
        how = "in-process render";
    } else {
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path();
        const std::string tag = std::to_string(::getpid());
        const fs::path svg1 = dir / ("tconvex_det1_" + tag + ".svg");
        const fs::path svg2 = dir / ("tconvex_det2_" + tag + ".svg");
        const fs::path log = dir / ("tconvex_det_" + tag + ".out");
        const std::string base = "\"" + opts.cli_path +
                                 "\" polygon --phis 0.8813735870195430 --hs 1 "
                                 "--periods 3 --format json --svg ";
        const int rc1 = std::system(
            (base + "\"" + svg1.string() + "\" > \"" + log.string() + "\" 2>&1").c_str());
        const int rc2 = std::system(
            (base + "\"" + svg2.string() + "\" > \"" + log.string() + "\" 2>&1").c_str());
        const std::string bytes1 = read_file_bytes(svg1);
        const std::string bytes2 = read_file_bytes(svg2);
        identical = rc1 == 0 && rc2 == 0 && !bytes1.empty() && bytes1 == bytes2 &&
                    bytes1.rfind("<svg", 0) == 0;
        how = "two runs of the installed tool";
        std::error_code ec;
        fs::remove(svg1, ec);
        fs::remove(svg2, ec);
        fs::remove(log, ec);
    }

    return {"cli_svg_determinism", identical && edges_equal,
            how + (identical ? ", byte-identical" : ", DIFFERENT bytes") +
                "; edge spread " + fmt_sci(lmax - lmin)};
}

} // namespace

std::vector<CheckResult> run_all_checks(const CheckOptions& opts) {
    Rng rng(opts.seed);
    std::vector<CheckResult> out;
    out.push_back(check_coarea_oracle(rng));
    out.push_back(check_n1_closed_form(rng));
    out.push_back(check_definiteness(rng));
    out.push_back(check_reversed_minkowski(rng));
    out.push_back(check_dihedral_two_path(rng));
    out.push_back(check_cross_ratio(rng));
    out.push_back(check_inverse_round_trip(rng));
    out.push_back(check_cone_angle(rng));
    out.push_back(check_sinh_identity(rng));
    out.push_back(check_invariance_suite(rng));
    out.push_back(check_cli_determinism(opts));
    return out;
}

} // namespace tconvex
