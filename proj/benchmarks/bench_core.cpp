#include <benchmark/benchmark.h>

#include "ortho/bound_engine.hpp"
#include "ortho/families.hpp"
#include "ortho/iso.hpp"
#include "ortho/lovasz.hpp"
#include "ortho/metrics.hpp"
#include "ortho/solver.hpp"

namespace {

using namespace ortho;

void bm_lower_bound_petersen(benchmark::State& state) {
    const Graph g = generate(FamilySpec::make(FamilyKind::Petersen));
    for (auto _ : state) benchmark::DoNotOptimize(lower_bound(g).bound);
}
BENCHMARK(bm_lower_bound_petersen);

void bm_lower_bound_paley13(benchmark::State& state) {
    const Graph g = generate(FamilySpec::make(FamilyKind::Paley, {13}));
    for (auto _ : state) benchmark::DoNotOptimize(lower_bound(g).bound);
}
BENCHMARK(bm_lower_bound_paley13);

void bm_canonical_form_petersen(benchmark::State& state) {
    const Graph g = generate(FamilySpec::make(FamilyKind::Petersen));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(bm_canonical_form_petersen);

void bm_clique_paley13(benchmark::State& state) {
    const Graph g = generate(FamilySpec::make(FamilyKind::Paley, {13}));
    for (auto _ : state) benchmark::DoNotOptimize(clique_number(g));
}
BENCHMARK(bm_clique_paley13);

void bm_theta_c5(benchmark::State& state) {
    const Graph g = generate(FamilySpec::make(FamilyKind::Cycle, {5}));
    for (auto _ : state) benchmark::DoNotOptimize(lovasz_theta(g).value);
}
BENCHMARK(bm_theta_c5);

void bm_solve_petersen_d3(benchmark::State& state) {
    const Graph g = generate(FamilySpec::make(FamilyKind::Petersen));
    SolveOptions opts;
    opts.restarts = 40;
    for (auto _ : state)
        benchmark::DoNotOptimize(feasible_for(g, 3, opts).restarts_used);
}
BENCHMARK(bm_solve_petersen_d3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
