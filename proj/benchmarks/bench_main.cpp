#include <benchmark/benchmark.h>

#include "tsdq/catalog.hpp"
#include "tsdq/hopf.hpp"
#include "tsdq/quantum.hpp"
#include "tsdq/statesum.hpp"

using namespace tsdq;

static void BM_CheckTsd(benchmark::State& state) {
    const auto s = catalog_structure("heap:Z" + std::to_string(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(check_tsd(s).pass);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CheckTsd)->RangeMultiplier(2)->Range(4, 16)->Complexity();

static void BM_Cocycle(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto psi = phi_i_cocycle(m, 1);
    for (auto _ : state) benchmark::DoNotOptimize(check_cocycle2(psi).pass);
}
BENCHMARK(BM_Cocycle)->DenseRange(4, 12, 4);

static void BM_H2(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto s = catalog_structure("heap:Z" + std::to_string(m));
    for (auto _ : state) benchmark::DoNotOptimize(compute_H2(s, AbelianGroup::integers()).free_rank);
}
BENCHMARK(BM_H2)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_StateSum(benchmark::State& state) {
    const auto s = catalog_structure("heap:D3");
    const auto psi = d3_psi_cocycle();
    const auto b = parse_sequence("n=3; s1 s2^-1 s1 s2^-1 t1 s1 s2");
    for (auto _ : state) benchmark::DoNotOptimize(vector_invariant(b, s, psi).colorings);
}
BENCHMARK(BM_StateSum);

static void BM_QuantumTrace(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto ctx = WeightContext::make(catalog_structure("heap:Z" + std::to_string(m)), phi_i_cocycle(m, 1),
                                         Character::standard(AbelianGroup::integers(), m));
    const auto b = parse_sequence("n=3; s1 s2^-1 s1 s2^-1 t1 s1 s2");
    for (auto _ : state) benchmark::DoNotOptimize(quantum_invariant(ctx, b));
}
BENCHMARK(BM_QuantumTrace)->DenseRange(2, 6, 2);

static void BM_Ybe(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto ctx = WeightContext::make(catalog_structure("heap:Z" + std::to_string(m)), phi_i_cocycle(m, 1),
                                         Character::standard(AbelianGroup::integers(), m));
    for (auto _ : state) benchmark::DoNotOptimize(check_ybe(ctx).pass);
}
BENCHMARK(BM_Ybe)->DenseRange(3, 6, 3)->Unit(benchmark::kMillisecond);

static void BM_DenseBraid(benchmark::State& state) {
    const auto d = catalog_tsd_object("quantum-heap:Z3", 3);
    const auto a = lift_cocycle(phi_i_cocycle(3, 1), Character::standard(AbelianGroup::integers(), 3));
    for (auto _ : state) benchmark::DoNotOptimize(check_braid_eq_dense(d, a).pass());
}
BENCHMARK(BM_DenseBraid)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
