#include "lpeq/lpeq.hpp"

#include <benchmark/benchmark.h>

using namespace lpeq;

namespace {

std::pair<Program, Program> pair_for(std::size_t atoms, unsigned required, std::uint64_t seed) {
    return random_pair(GeneratorConfig{atoms, atoms + 2, required, 0, seed});
}

void BM_AnswerSets(benchmark::State& state) {
    const Program p = random_program({static_cast<std::size_t>(state.range(0)), 8, 0, 0, 1});
    for (auto _ : state) benchmark::DoNotOptimize(answer_sets(p));
}
BENCHMARK(BM_AnswerSets)->DenseRange(2, 8, 2);

void BM_SEModels(benchmark::State& state) {
    const Program p = random_program({static_cast<std::size_t>(state.range(0)), 8, 0, 0, 2});
    for (auto _ : state) benchmark::DoNotOptimize(se_models(p));
}
BENCHMARK(BM_SEModels)->DenseRange(2, 8, 2);

void BM_RelStrong(benchmark::State& state) {
    const auto [p, q] = pair_for(static_cast<std::size_t>(state.range(0)), 0, 3);
    const AtomSet a = AtomSet::first(static_cast<std::size_t>(state.range(0)) / 2);
    const DecideOptions opts{state.range(1) != 0, false, false};
    for (auto _ : state) benchmark::DoNotOptimize(decide_rel_strong(p, q, a, opts));
}
BENCHMARK(BM_RelStrong)->ArgsProduct({{4, 6, 8}, {0, 1}});

void BM_RelUniformNormal(benchmark::State& state) {
    const auto [p, q] = pair_for(static_cast<std::size_t>(state.range(0)), kNormal, 4);
    const AtomSet a = AtomSet::first(static_cast<std::size_t>(state.range(0)) / 2);
    const DecideOptions opts{state.range(1) != 0, false, false};
    for (auto _ : state) benchmark::DoNotOptimize(decide_rel_uniform(p, q, a, opts));
}
BENCHMARK(BM_RelUniformNormal)->ArgsProduct({{4, 6, 8}, {0, 1}});

void BM_HornDeciders(benchmark::State& state) {
    const auto [p, q] = pair_for(static_cast<std::size_t>(state.range(0)), kHorn, 5);
    const AtomSet a = AtomSet::first(static_cast<std::size_t>(state.range(0)) / 2);
    for (auto _ : state) {
        if (state.range(1) == 0) benchmark::DoNotOptimize(decide_horn_rel(p, q, a));
        else benchmark::DoNotOptimize(decide_horn_bounded(p, q, a));
    }
}
BENCHMARK(BM_HornDeciders)->ArgsProduct({{4, 6, 8}, {0, 1}});

void BM_ExhaustiveSweep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_sweep("unary-oracle", 1));
}
BENCHMARK(BM_ExhaustiveSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
