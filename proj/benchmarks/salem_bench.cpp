#include <benchmark/benchmark.h>

#include "salem/salem.hpp"
#include "salem_cli/commands.hpp"

using namespace salem;

static void BM_EncodeTruncated(benchmark::State& state) {
    const auto P = ProbabilityVector::parse("2/7,3/7,2/7");
    const Rational x(3, 11);
    const auto budget = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(encode(P, x, budget));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EncodeTruncated)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void BM_EncodePeriodic(benchmark::State& state) {
    const auto P = ProbabilityVector::parse("1/2,1/4,1/4");
    const Rational x(1, static_cast<std::int64_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(encode(P, x, 1 << 20));
    }
}
BENCHMARK(BM_EncodePeriodic)->Arg(97)->Arg(997)->Arg(9973);

static void BM_EvalPeriodic(benchmark::State& state) {
    const auto P = ProbabilityVector::parse("1/2,1/3,1/6");
    std::vector<Digit> period(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < period.size(); ++i) {
        period[i] = static_cast<Digit>((i * 7 + 1) % 3);
    }
    const PeriodicDigits d(P.alphabet(), {1, 2}, period);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_periodic(P, d));
    }
}
BENCHMARK(BM_EvalPeriodic)->RangeMultiplier(4)->Range(16, 1024);

static void BM_CylinderChildren(benchmark::State& state) {
    const auto P = ProbabilityVector::parse("1/2,1/3,1/6");
    const auto c = cylinder_of(P, parse_word("012012012012", P.alphabet()));
    for (auto _ : state) {
        benchmark::DoNotOptimize(children(c));
    }
}
BENCHMARK(BM_CylinderChildren);

static void BM_SampleCsv(benchmark::State& state) {
    const auto P = ProbabilityVector::parse("1/2,1/3,1/6");
    for (auto _ : state) {
        benchmark::DoNotOptimize(cli::sample_csv(P, static_cast<std::size_t>(state.range(0)), 12));
    }
}
BENCHMARK(BM_SampleCsv)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
