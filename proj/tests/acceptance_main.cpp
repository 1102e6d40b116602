// Acceptance gate: runs every release criterion and prints one line per
// check.  The CLI binary under test is passed with --cli so the rendering
// checks exercise the real executable rather than the in-process fallback.

#include "tconvex/checks.hpp"

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    tconvex::CheckOptions opts;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--cli" && i + 1 < argc) {
            opts.cli_path = argv[++i];
        } else if (arg == "--seed" && i + 1 < argc) {
            opts.seed = static_cast<std::uint64_t>(std::strtoull(argv[++i], nullptr, 10));
        } else {
            std::cerr << "usage: acceptance [--cli <tconvex binary>] [--seed <n>]\n";
            return 2;
        }
    }

    const std::vector<tconvex::CheckResult> results = tconvex::run_all_checks(opts);
    std::size_t passed = 0;
    for (const tconvex::CheckResult& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " - "
                  << r.detail << "\n";
        if (r.passed) ++passed;
    }
    std::cout << passed << "/" << results.size() << " checks passed (seed "
              << opts.seed << ")\n";
    return passed == results.size() ? 0 : 1;
}
