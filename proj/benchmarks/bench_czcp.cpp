#include <benchmark/benchmark.h>

#include <random>

#include "czcp/catalog.hpp"
#include "czcp/correlation.hpp"
#include "czcp/search.hpp"
#include "czcp/turyn.hpp"
#include "czcp/verify.hpp"

using namespace czcp;

namespace {

SequencePair random_pair(std::size_t n) {
    std::mt19937_64 rng(n);
    std::vector<std::int8_t> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = (rng() & 1) ? 1 : -1;
        b[i] = (rng() & 1) ? 1 : -1;
    }
    return SequencePair(BinarySequence(a), BinarySequence(b));
}

// Scalar definition evaluated shift by shift.
void BM_ProfileScalar(benchmark::State& state) {
    const auto p = random_pair(static_cast<std::size_t>(state.range(0)));
    const long long n = static_cast<long long>(p.size());
    for (auto _ : state) {
        std::vector<int> aacs(p.size());
        for (long long u = 0; u < n; ++u) aacs[u] = aacf(p.first(), u) + aacf(p.second(), u);
        benchmark::DoNotOptimize(aacs.data());
    }
}
BENCHMARK(BM_ProfileScalar)->RangeMultiplier(4)->Range(16, 4096);

void BM_ProfilePacked(benchmark::State& state) {
    const auto p = random_pair(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto aacs = aacs_profile(p);
        benchmark::DoNotOptimize(aacs.data());
    }
}
BENCHMARK(BM_ProfilePacked)->RangeMultiplier(4)->Range(16, 4096);

void BM_WordAacf(benchmark::State& state) {
    const auto p = random_pair(28);
    const auto w = pack_word(p.first());
    unsigned u = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(word::aacf(w, 28, u));
        u = u % 27 + 1;
    }
}
BENCHMARK(BM_WordAacf);

void BM_CzcpWidth(benchmark::State& state) {
    const auto p = golay_pair(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(czcp_width(p));
}
BENCHMARK(BM_CzcpWidth)->Arg(64)->Arg(520)->Arg(4160);

void BM_ConstructExtended(benchmark::State& state) {
    const auto gcp = golay_pair(static_cast<std::uint64_t>(state.range(0)));
    const auto& k28 = seed("K28").pair;
    for (auto _ : state) benchmark::DoNotOptimize(construct_extended(gcp, k28, true).measured_width);
}
BENCHMARK(BM_ConstructExtended)->Arg(10)->Arg(104);

void BM_Search(benchmark::State& state) {
    SearchSpec spec;
    spec.length = static_cast<unsigned>(state.range(0));
    spec.mid_abs = 2;
    std::uint64_t scanned = 0;
    for (auto _ : state) {
        const auto r = run_search(spec);
        scanned += r.candidates_scanned;
        benchmark::DoNotOptimize(r.classes);
    }
    state.counters["candidates/s"] = benchmark::Counter(static_cast<double>(scanned), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_Search)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
