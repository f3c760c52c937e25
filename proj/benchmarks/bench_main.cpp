#include <benchmark/benchmark.h>

#include "omcube/complete.hpp"
#include "omcube/comstruct.hpp"
#include "omcube/corpus.hpp"
#include "omcube/fourier_motzkin.hpp"

namespace omcube {
namespace {

void BM_Classify(benchmark::State& state) {
    const auto f = named(state.range(0) == 0 ? "RD" : "C8xP3");
    for (auto _ : state) benchmark::DoNotOptimize(classify(f));
}
BENCHMARK(BM_Classify)->Arg(0)->Arg(1);

void BM_FaceLattice(benchmark::State& state) {
    const auto f = gen_pencil_cuom(6, 3, 3, 1).topes;
    for (auto _ : state) benchmark::DoNotOptimize(FaceLattice(f).faces().size());
}
BENCHMARK(BM_FaceLattice);

void BM_Enumerate(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_partial_cubes(m).size());
}
BENCHMARK(BM_Enumerate)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_MinCompletion(benchmark::State& state) {
    const auto f = named("C8xP3");
    for (auto _ : state) benchmark::DoNotOptimize(min_ample_completion(f, 3));
}
BENCHMARK(BM_MinCompletion)->Unit(benchmark::kMillisecond);

void BM_UomToAmp(benchmark::State& state) {
    const auto g = gen_uniform_om(static_cast<int>(state.range(0)), 3, 7).topes;
    for (auto _ : state) benchmark::DoNotOptimize(uom_to_amp(g).result.size());
}
BENCHMARK(BM_UomToAmp)->Arg(4)->Arg(6)->Arg(7);

void BM_CuomToAmp(benchmark::State& state) {
    const auto s = gen_pencil_cuom(6, 3, 3, 2).topes;
    for (auto _ : state) benchmark::DoNotOptimize(cuom_to_amp(s).trace.result.size());
}
BENCHMARK(BM_CuomToAmp)->Unit(benchmark::kMillisecond);

void BM_ArrangementTopes(benchmark::State& state) {
    const auto arr = gen_uniform_om(static_cast<int>(state.range(0)), 3, 5).arrangement;
    for (auto _ : state) benchmark::DoNotOptimize(arrangement_topes(arr).size());
}
BENCHMARK(BM_ArrangementTopes)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace omcube

BENCHMARK_MAIN();
