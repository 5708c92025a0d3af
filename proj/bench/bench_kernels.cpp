// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <cmath>

#include "meixner/families.hpp"
#include "meixner/ortho.hpp"

using namespace meixner;

namespace {

ShefferPair meixner_pair(std::size_t n) {
    const GeneratingFunction gf = generating_function_of(FamilyInstance(Meixner{Rat(3, 2), Rat(1, 4)}), 2 * n + 2);
    return {gf.f, gf.u};
}

void BM_ExpandSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const ShefferPair pair = meixner_pair(n);
    for (auto _ : state) benchmark::DoNotOptimize(expand_serial(pair, n));
}

void BM_ExpandParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const ShefferPair pair = meixner_pair(n);
    for (auto _ : state) benchmark::DoNotOptimize(expand(pair, n));
}

void gram(benchmark::State& state, const FamilyInstance& fam, Execution exec) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gram_check(fam, n, exec));
}

void BM_GramCharlierSerial(benchmark::State& s) { gram(s, FamilyInstance(Charlier{Rat(2)}), Execution::Serial); }
void BM_GramCharlierParallel(benchmark::State& s) { gram(s, FamilyInstance(Charlier{Rat(2)}), Execution::Parallel); }

void BM_GramMPSerial(benchmark::State& s) {
    gram(s, FamilyInstance(MeixnerPollaczek{Rat(1), Angle::half_pi()}), Execution::Serial);
}
void BM_GramMPParallel(benchmark::State& s) {
    gram(s, FamilyInstance(MeixnerPollaczek{Rat(1), Angle::half_pi()}), Execution::Parallel);
}

void BM_IntegrateSerial(benchmark::State& state) {
    const auto g = [](double x) { return std::exp(-x * x) * std::cos(3.0 * x); };
    for (auto _ : state) benchmark::DoNotOptimize(integrate(g, -10.0, 10.0, 4096, Execution::Serial));
}

void BM_IntegrateParallel(benchmark::State& state) {
    const auto g = [](double x) { return std::exp(-x * x) * std::cos(3.0 * x); };
    for (auto _ : state) benchmark::DoNotOptimize(integrate(g, -10.0, 10.0, 4096, Execution::Parallel));
}

}  // namespace

BENCHMARK(BM_ExpandSerial)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpandParallel)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramCharlierSerial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramCharlierParallel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramMPSerial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramMPParallel)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntegrateSerial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_IntegrateParallel)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
