#include "xyness/model.hpp"
#include "xyness/observables.hpp"
#include "xyness/osee.hpp"
#include "xyness/spectral.hpp"

#include <benchmark/benchmark.h>

using namespace xyness;

namespace {

ChainSpec driven(int n) { return {n, 0.5, 0.6, 0.5, 0.3, 0.5, 0.1}; }

void BM_BuildStructureMatrix(benchmark::State& state) {
    const ChainSpec s = driven(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_structure_matrix(s));
}

void BM_Diagonalize(benchmark::State& state) {
    const StructureMatrix a = build_structure_matrix(driven(int(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(diagonalize(a));
    state.SetComplexityN(state.range(0));
}

void BM_TwoPointTable(benchmark::State& state) {
    const NormalModeBasis b = diagonalize(build_structure_matrix(driven(int(state.range(0)))));
    for (auto _ : state) benchmark::DoNotOptimize(two_point_table(b));
}

void BM_SpinSpinMatrix(benchmark::State& state) {
    const TwoPointTable t = two_point_table(diagonalize(build_structure_matrix(driven(int(state.range(0))))));
    for (auto _ : state) benchmark::DoNotOptimize(spin_spin_matrix(t));
}

void BM_Osee(benchmark::State& state) {
    const int n = int(state.range(0));
    const NormalModeBasis b = diagonalize(build_structure_matrix(driven(n)));
    for (auto _ : state) benchmark::DoNotOptimize(osee(b, n / 2));
}

} // namespace

BENCHMARK(BM_BuildStructureMatrix)->Arg(40)->Arg(160);
BENCHMARK(BM_Diagonalize)->Arg(20)->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_TwoPointTable)->Arg(40)->Arg(160)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpinSpinMatrix)->Arg(40)->Arg(160)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Osee)->Arg(40)->Arg(160)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
