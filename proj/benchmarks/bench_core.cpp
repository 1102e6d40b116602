#include "tconvex/checks.hpp"
#include "tconvex/coarea.hpp"
#include "tconvex/cone_manifold.hpp"
#include "tconvex/orthoscheme.hpp"
#include "tconvex/polygon.hpp"
#include "tconvex/svg.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

tconvex::PolygonSpec fixed_spec(int n) {
    tconvex::Rng rng(2025u + static_cast<std::uint64_t>(n));
    return tconvex::random_interior_spec(rng, n, n);
}

void BM_coarea_formula(benchmark::State& state) {
    const tconvex::PolygonSpec spec = fixed_spec(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(tconvex::coarea_formula(spec));
}
BENCHMARK(BM_coarea_formula)->Arg(3)->Arg(10)->Arg(100);

void BM_coarea_geometric(benchmark::State& state) {
    const tconvex::PolygonSpec spec = fixed_spec(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(tconvex::coarea_geometric(spec));
}
BENCHMARK(BM_coarea_geometric)->Arg(3)->Arg(10)->Arg(100);

void BM_geometry(benchmark::State& state) {
    const tconvex::PolygonSpec spec = fixed_spec(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(tconvex::geometry(spec));
}
BENCHMARK(BM_geometry)->Arg(3)->Arg(10)->Arg(100);

void BM_gram_definiteness(benchmark::State& state) {
    const tconvex::PolygonSpec spec = fixed_spec(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const tconvex::GramMatrix g = tconvex::gram(spec.phis());
        benchmark::DoNotOptimize(tconvex::is_positive_definite(g));
    }
}
BENCHMARK(BM_gram_definiteness)->Arg(3)->Arg(10)->Arg(100);

void BM_dihedral_cosines(benchmark::State& state) {
    const tconvex::PolygonSpec spec = fixed_spec(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(tconvex::dihedral_cosines(spec.phis()));
}
BENCHMARK(BM_dihedral_cosines)->Arg(3)->Arg(10)->Arg(100);

void BM_solve_angles(benchmark::State& state) {
    const tconvex::PolygonSpec spec = fixed_spec(static_cast<int>(state.range(0)));
    const tconvex::OrthoschemeAngles oa = tconvex::dihedral_cosines(spec.phis());
    std::vector<double> A(oa.dihedral_cos.size());
    for (std::size_t k = 0; k < A.size(); ++k)
        A[k] = oa.dihedral_cos[k] * oa.dihedral_cos[k];
    for (auto _ : state)
        benchmark::DoNotOptimize(tconvex::solve_angles_from_dihedral(A));
}
BENCHMARK(BM_solve_angles)->Arg(3)->Arg(6);

void BM_s_cone_angle(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(tconvex::s_cone_angle(0.3, 0.4, 0.5));
}
BENCHMARK(BM_s_cone_angle);

void BM_render_svg(benchmark::State& state) {
    const tconvex::PolygonSpec spec = fixed_spec(5);
    const int periods = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(tconvex::render_svg(spec, periods));
}
BENCHMARK(BM_render_svg)->Arg(3)->Arg(9);

} // namespace

BENCHMARK_MAIN();
