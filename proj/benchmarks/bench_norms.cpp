#include <benchmark/benchmark.h>

#include "rinorm/maximal.hpp"
#include "rinorm/norms.hpp"
#include "rinorm/random_gen.hpp"

using namespace rinorm;

namespace {

StepFunction fixture(int pieces) {
    Rng rng(4242);
    StepFunction f = random_step(rng, pieces, 4.0L, 5.0L);
    while (f.is_zero()) f = random_step(rng, pieces, 4.0L, 5.0L);
    return f;
}

void bm_rearrangement(benchmark::State& state) {
    const StepFunction f = fixture(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rearrangement(f));
}

void bm_norm(benchmark::State& state, const NormSpec& spec) {
    const StepFunction f = fixture(64);
    for (auto _ : state) benchmark::DoNotOptimize(rep_norm(f, spec));
}

void bm_averaged(benchmark::State& state) {
    const StepFunction f = fixture(64);
    const NormSpec spec = NormSpec::lorentz(2, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(averaged_norm(f, Interval(0.25L, 2.5L), spec));
}

void bm_maximal_field(benchmark::State& state) {
    const StepFunction f = fixture(16);
    const NormSpec spec = NormSpec::lebesgue(1);
    const Grid1D grid(0, 4.0L, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(maximal_field(f, spec, grid, AllPairs{}));
}

}  // namespace

BENCHMARK(bm_rearrangement)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK_CAPTURE(bm_norm, lebesgue, NormSpec::lebesgue(1.5L));
BENCHMARK_CAPTURE(bm_norm, lorentz, NormSpec::lorentz(2, 1));
BENCHMARK_CAPTURE(bm_norm, orlicz, NormSpec::orlicz(YoungFunction::power(2)));
BENCHMARK_CAPTURE(bm_norm, lambda, NormSpec::lambda_phi(ConcavePhi::power(0.5L)));
BENCHMARK_CAPTURE(bm_norm, marcinkiewicz,
                  NormSpec::marcinkiewicz(ConcavePhi::power(0.5L)));
BENCHMARK(bm_averaged);
BENCHMARK(bm_maximal_field)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
