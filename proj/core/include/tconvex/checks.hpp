#pragma once

#include "tconvex/polygon.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace tconvex {

// Deterministic RNG for the property sweeps: a fixed standard engine and a
// fixed uint64 -> double mapping so pass/fail counts reproduce across
// platforms for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }
    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 gen_;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CheckOptions {
    std::uint64_t seed = 20250815u;
    // Path of the CLI binary for the end-to-end determinism criterion.
    // Empty: render in-process instead of spawning the real tool.
    std::string cli_path;
};

// Random angles in [phi_lo, phi_hi]^n and a support vector sampled interior
// to the cone: h = 1 + s*delta with the perturbation scale halved until
// every edge length is positive (equal support numbers are always interior).
PolygonSpec random_interior_spec(Rng& rng, int n_lo, int n_hi,
                                 double phi_lo = 0.05, double phi_hi = 1.5);

// The acceptance criteria, in order; each returns one pass/fail line.
std::vector<CheckResult> run_all_checks(const CheckOptions& opts);

} // namespace tconvex
