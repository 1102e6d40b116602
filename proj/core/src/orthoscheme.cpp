#include "tconvex/orthoscheme.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

namespace tconvex {

double dihedral_cos_sq_triple(double x, double y, double z) {
    return std::sinh(x) * std::sinh(z) /
           (std::sinh(x + y) * std::sinh(y + z));
}

namespace {

void require_angles(const std::vector<double>& phis, const char* who) {
    for (double p : phis)
        if (!std::isfinite(p) || p < kPhiMin)
            throw BadAngle(std::string(who) + ": angles must be finite and >= 1e-8");
}

} // namespace

std::vector<double> dihedral_cosines_from_gram(const std::vector<double>& phis) {
    const std::size_t n = phis.size();
    if (n < 3)
        throw TooFewFacets("dihedral_cosines_from_gram: need n >= 3");
    const GramMatrix g = gram(phis);
    std::vector<double> c(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t next = (k + 1) % n;
        c[k] = -g.at(k, next) / std::sqrt(g.at(k, k) * g.at(next, next));
    }
    return c;
}

OrthoschemeAngles dihedral_cosines(const std::vector<double>& phis) {
    const std::size_t n = phis.size();
    if (n < 3)
        throw TooFewFacets("dihedral_cosines: need n >= 3");
    require_angles(phis, "dihedral_cosines");

    OrthoschemeAngles out;
    out.n = n;
    out.dihedral_cos.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double x = phis[(k + n - 1) % n];
        const double y = phis[k];
        const double z = phis[(k + 1) % n];
        out.dihedral_cos[k] = std::sqrt(dihedral_cos_sq_triple(x, y, z));
    }

    // Two independent routes to the same number; disagreement would mean a
    // formula transcription bug, so it is fatal rather than reported.
    const std::vector<double> from_gram = dihedral_cosines_from_gram(phis);
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(out.dihedral_cos[k] - from_gram[k]) > 1e-12)
            throw NumericalInconsistency(
                "dihedral_cosines: closed form and Gram path disagree");
        if (!(out.dihedral_cos[k] > 0.0 && out.dihedral_cos[k] < 1.0))
            throw NumericalInconsistency(
                "dihedral_cosines: cosine escaped (0,1)");
    }
    return out;
}

double arc_length_n2(double phi1, double phi2) {
    const std::vector<double> phis{phi1, phi2};
    require_angles(phis, "arc_length_n2");
    const GramMatrix g = gram(phis);
    return std::acos(-g.at(0, 1) / std::sqrt(g.at(0, 0) * g.at(1, 1)));
}

namespace {

// Prefix angle sum, cyclically extended one step past each end
// (j from -1 to n+1): psi_0 = 0, psi_{-1} = -phi_{n-1}, psi_{n+1} = t + phi_0.
double psi_at(const std::vector<double>& phis, long j) {
    const long n = static_cast<long>(phis.size());
    if (j == -1) return -phis[static_cast<std::size_t>(n - 1)];
    double s = 0.0;
    for (long m = 0; m < j; ++m)
        s += phis[static_cast<std::size_t>(m % n)];
    return s;
}

} // namespace

CrossRatioWitness cross_ratio(const std::vector<double>& phis, std::size_t k,
                              double transversal_height) {
    const std::size_t n = phis.size();
    if (n < 3)
        throw TooFewFacets("cross_ratio: need n >= 3");
    require_angles(phis, "cross_ratio");
    if (k >= n)
        throw BadInput("cross_ratio: index out of range");
    if (!(transversal_height > 0.0))
        throw BadInput("cross_ratio: transversal height must be positive");

    CrossRatioWitness w;
    w.k = k;
    double psi[4];
    for (int m = 0; m < 4; ++m) {
        const long j = static_cast<long>(k) - 1 + m;
        psi[m] = psi_at(phis, j);
        // The line through eta = (sinh psi, cosh psi) meets {x2 = H} at
        // x1 = H tanh(psi).
        w.u[static_cast<std::size_t>(m)] =
            transversal_height * std::tanh(psi[m]);
    }
    // Cross-ratio of the four intersection points. Each difference expands
    // as H (tanh a - tanh b) = H sinh(a - b) / (cosh a cosh b); the height
    // and the cosh factors cancel in the ratio, which sidesteps the severe
    // cancellation in u_a - u_b once the tanh values saturate near +-1.
    w.lambda = (std::sinh(psi[2] - psi[0]) * std::sinh(psi[3] - psi[1])) /
               (std::sinh(psi[2] - psi[1]) * std::sinh(psi[3] - psi[0]));
    return w;
}

// ---------------------------------------------------------------------------
// Inverse solver.

namespace {

constexpr double kPhiCap = 100.0; // keeps every sinh finite (sinh 200 < DBL_MAX)

struct ChainResult {
    bool feasible = false;
    std::vector<double> phi;
    double r1 = 0.0; // residual of the constraint A_{n-2}
    double r2 = 0.0; // residual of the constraint A_{n-1}
};

// Unroll phi_{k+2} from A_k = sinh phi_k sinh phi_{k+2} /
// (sinh(phi_k+phi_{k+1}) sinh(phi_{k+1}+phi_{k+2})) for k = 0..n-3, then
// report the two unused cyclic constraints as residuals.
ChainResult run_chain(const std::vector<double>& A, double s1, double s2) {
    const std::size_t n = A.size();
    ChainResult out;
    out.phi.assign(n, 0.0);
    out.phi[0] = s1;
    out.phi[1] = s2;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const double S = std::sinh(out.phi[k] + out.phi[k + 1]);
        const double den =
            std::sinh(out.phi[k]) - A[k] * S * std::cosh(out.phi[k + 1]);
        if (!(den > 0.0)) return out;
        const double r = A[k] * S * std::sinh(out.phi[k + 1]) / den;
        if (!(r > 0.0 && r < 1.0)) return out;
        const double next = std::atanh(r);
        if (!(next >= kPhiMin && next <= kPhiCap)) return out;
        out.phi[k + 2] = next;
    }
    const auto rel3 = [&](std::size_t a, std::size_t b, std::size_t c) {
        return dihedral_cos_sq_triple(out.phi[a], out.phi[b], out.phi[c]);
    };
    out.r1 = rel3(n - 2, n - 1, 0) - A[n - 2];
    out.r2 = rel3(n - 1, 0, 1) - A[n - 1];
    out.feasible = true;
    return out;
}

// Stage 2: damped 2-D Newton on the chain seeds with a finite-difference
// Jacobian. Returns the closed chain on success.
bool close_chain(const std::vector<double>& A, double s1, double s2,
                 std::vector<double>& solution, bool& saw_feasible_chain) {
    constexpr double kStep = 1e-6;
    constexpr int kMaxIter = 200;
    constexpr double kTol = 1e-10;

    ChainResult cur = run_chain(A, s1, s2);
    if (!cur.feasible) return false;
    saw_feasible_chain = true;

    for (int iter = 0; iter < kMaxIter; ++iter) {
        double norm = std::max(std::abs(cur.r1), std::abs(cur.r2));
        if (norm < kTol) {
            solution = cur.phi;
            return true;
        }
        const ChainResult d1 = run_chain(A, s1 + kStep, s2);
        const ChainResult d2 = run_chain(A, s1, s2 + kStep);
        if (!d1.feasible || !d2.feasible) return false;
        const double j11 = (d1.r1 - cur.r1) / kStep;
        const double j21 = (d1.r2 - cur.r2) / kStep;
        const double j12 = (d2.r1 - cur.r1) / kStep;
        const double j22 = (d2.r2 - cur.r2) / kStep;
        const double det = j11 * j22 - j12 * j21;
        if (det == 0.0 || !std::isfinite(det)) return false;
        const double dx1 = (-cur.r1 * j22 + cur.r2 * j12) / det;
        const double dx2 = (-j11 * cur.r2 + j21 * cur.r1) / det;

        double lambda = 1.0;
        bool stepped = false;
        for (int half = 0; half < 30; ++half, lambda *= 0.5) {
            const double n1 = s1 + lambda * dx1;
            const double n2 = s2 + lambda * dx2;
            if (!(n1 > kPhiMin && n1 < kPhiCap && n2 > kPhiMin && n2 < kPhiCap))
                continue;
            const ChainResult cand = run_chain(A, n1, n2);
            if (!cand.feasible) continue;
            if (std::max(std::abs(cand.r1), std::abs(cand.r2)) < norm) {
                s1 = n1;
                s2 = n2;
                cur = cand;
                stepped = true;
                break;
            }
        }
        if (!stepped) return false;
    }
    return false;
}

// Stage 3: Newton on all n angles at once against the centered residuals
// F_k = cos^2(phi_{k-1}, phi_k, phi_{k+1}) - A_k. Immune to the chain's
// exponential seed sensitivity, at the price of an n x n solve per step.
bool full_newton(const std::vector<double>& A, std::vector<double> phi,
                 std::vector<double>& solution) {
    const std::size_t n = A.size();
    constexpr int kMaxIter = 300;
    constexpr double kTol = 1e-12;

    const auto eval = [&](const std::vector<double>& p, std::vector<double>& f) {
        for (std::size_t k = 0; k < n; ++k)
            f[k] = dihedral_cos_sq_triple(p[(k + n - 1) % n], p[k],
                                          p[(k + 1) % n]) -
                   A[k];
    };
    const auto coth = [](double x) { return std::cosh(x) / std::sinh(x); };

    std::vector<double> f(n), fc(n), cand(n);
    eval(phi, f);
    double fn = 0.0;
    for (double v : f) fn = std::max(fn, std::abs(v));

    std::vector<double> M(n * (n + 1)); // augmented [J | -f]
    std::vector<double> dx(n);
    for (int iter = 0; iter < kMaxIter; ++iter) {
        if (fn < kTol) {
            solution = phi;
            return true;
        }

        std::fill(M.begin(), M.end(), 0.0);
        const std::size_t w = n + 1;
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t km = (k + n - 1) % n;
            const std::size_t kp = (k + 1) % n;
            const double x = phi[km], y = phi[k], z = phi[kp];
            const double r = dihedral_cos_sq_triple(x, y, z);
            // d/dx log r = coth x - coth(x+y), and cyclically.
            M[k * w + km] += r * (coth(x) - coth(x + y));
            M[k * w + k] += r * (-coth(x + y) - coth(y + z));
            M[k * w + kp] += r * (coth(z) - coth(y + z));
            M[k * w + n] = -f[k];
        }

        // Gaussian elimination with partial pivoting on the augmented system.
        bool singular = false;
        for (std::size_t col = 0; col < n && !singular; ++col) {
            std::size_t piv = col;
            for (std::size_t row = col + 1; row < n; ++row)
                if (std::abs(M[row * w + col]) > std::abs(M[piv * w + col]))
                    piv = row;
            if (std::abs(M[piv * w + col]) < 1e-300) {
                singular = true;
                break;
            }
            if (piv != col)
                for (std::size_t c2 = col; c2 < w; ++c2)
                    std::swap(M[piv * w + c2], M[col * w + c2]);
            for (std::size_t row = col + 1; row < n; ++row) {
                const double m = M[row * w + col] / M[col * w + col];
                if (m == 0.0) continue;
                for (std::size_t c2 = col; c2 < w; ++c2)
                    M[row * w + c2] -= m * M[col * w + c2];
            }
        }
        if (singular) return false;
        for (std::size_t row = n; row-- > 0;) {
            double s = M[row * w + n];
            for (std::size_t c2 = row + 1; c2 < n; ++c2)
                s -= M[row * w + c2] * dx[c2];
            dx[row] = s / M[row * w + row];
        }

        double lambda = 1.0;
        bool stepped = false;
        for (int half = 0; half < 30; ++half, lambda *= 0.5) {
            bool in_box = true;
            for (std::size_t i = 0; i < n; ++i) {
                cand[i] = phi[i] + lambda * dx[i];
                if (!(cand[i] > kPhiMin && cand[i] < kPhiCap)) {
                    in_box = false;
                    break;
                }
            }
            if (!in_box) continue;
            eval(cand, fc);
            double fcn = 0.0;
            for (double v : fc) fcn = std::max(fcn, std::abs(v));
            if (fcn < fn) {
                phi.swap(cand);
                f.swap(fc);
                fn = fcn;
                stepped = true;
                break;
            }
        }
        if (!stepped) return false;
    }
    return false;
}

// Residual actually promised to callers: max_k |c_k(phi)^2 - A_k|.
double aligned_residual(const std::vector<double>& phi,
                        const std::vector<double>& A) {
    const std::size_t n = A.size();
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double c2 = dihedral_cos_sq_triple(phi[(k + n - 1) % n], phi[k],
                                                 phi[(k + 1) % n]);
        worst = std::max(worst, std::abs(c2 - A[k]));
    }
    return worst;
}

} // namespace

std::vector<double> solve_angles_from_dihedral(const std::vector<double>& A) {
    const std::size_t n = A.size();
    if (n < 3)
        throw BadInput("solve_angles_from_dihedral: need n >= 3 cosines");
    for (double a : A)
        if (!std::isfinite(a) || !(a > 0.0 && a < 1.0))
            throw BadInput("solve_angles_from_dihedral: squared cosines must lie in (0,1)");

    constexpr double kAccept = 1e-7; // comfortably inside the 1e-6 contract

    bool saw_feasible_chain = false;
    std::vector<double> chain_phi;

    // Stage 1+2 from the default seed, then the multi-start grid.
    std::vector<std::pair<double, double>> seeds{{1.0, 1.0}};
    for (double a : {0.25, 0.5, 1.0, 2.0})
        for (double b : {0.25, 0.5, 1.0, 2.0})
            if (!(a == 1.0 && b == 1.0)) seeds.emplace_back(a, b);

    for (const auto& [s1, s2] : seeds) {
        if (!close_chain(A, s1, s2, chain_phi, saw_feasible_chain)) continue;
        // The chain convention has A_k spanning phi_k..phi_{k+2}; rotating
        // left by one aligns it with the centered dihedral indexing.
        std::vector<double> phi(chain_phi.begin() + 1, chain_phi.end());
        phi.push_back(chain_phi.front());
        if (aligned_residual(phi, A) <= kAccept) return phi;
    }

    // Stage 3: full-dimensional Newton. Initial guess inverts the
    // equal-angle formula c = 1/(2 cosh phi) coordinatewise.
    std::vector<double> init(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double v = 1.0 / (2.0 * std::sqrt(A[k]));
        const double est = v > 1.0 ? std::acosh(v) : 0.1;
        init[k] = std::clamp(est, 0.05, 3.0);
    }
    std::vector<double> phi;
    if (full_newton(A, init, phi) && aligned_residual(phi, A) <= kAccept)
        return phi;

    std::mt19937_64 rng(0x0ff5e7u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int attempt = 0; attempt < 20; ++attempt) {
        const double scale = 0.5 + 1.5 * unit(rng);
        std::vector<double> pert(n);
        for (std::size_t k = 0; k < n; ++k)
            pert[k] = std::clamp(
                init[k] * scale * std::exp(0.5 * (unit(rng) - 0.5)), 0.02, 4.0);
        if (full_newton(A, pert, phi) && aligned_residual(phi, A) <= kAccept)
            return phi;
    }

    if (!saw_feasible_chain)
        throw Infeasible(
            "solve_angles_from_dihedral: every seed chain left the admissible range");
    throw NoConvergence(
        "solve_angles_from_dihedral: root-finding failed on all starts");
}

} // namespace tconvex
