#include <benchmark/benchmark.h>

#include "juggle/card.hpp"
#include "juggle/counting.hpp"
#include "juggle/matrix.hpp"
#include "juggle/oracle.hpp"
#include "juggle/structure.hpp"

namespace {

void BM_AllCards(benchmark::State& state) {
    const int b = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto cards = juggle::all_cards(b);
        benchmark::DoNotOptimize(cards);
    }
}
BENCHMARK(BM_AllCards)->Arg(4)->Arg(6)->Arg(8);

void BM_BuildTransfer(benchmark::State& state) {
    const int b = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto m = juggle::build_transfer(b);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_BuildTransfer)->Arg(5)->Arg(7)->Arg(9);

void BM_TracePower(benchmark::State& state) {
    const int b = static_cast<int>(state.range(0));
    for (auto _ : state) {
        juggle::pattern_counter counter;
        auto t = counter.trace_power(b, 15);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_TracePower)->Arg(4)->Arg(5);

void BM_PatternTable(benchmark::State& state) {
    for (auto _ : state) {
        juggle::pattern_counter counter;
        auto records = counter.table(2, 5, 1, 15, {});
        benchmark::DoNotOptimize(records);
    }
}
BENCHMARK(BM_PatternTable);

void BM_CharPoly(benchmark::State& state) {
    const int b = static_cast<int>(state.range(0));
    const auto m = juggle::build_transfer(b);
    for (auto _ : state) {
        auto p = juggle::char_poly(m);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_CharPoly)->Arg(4)->Arg(5)->Arg(6);

void BM_ClosedWalks(benchmark::State& state) {
    for (auto _ : state) {
        auto walks = juggle::enumerate_closed_walks(3, 3);
        benchmark::DoNotOptimize(walks);
    }
}
BENCHMARK(BM_ClosedWalks);

void BM_CappedCardTotal(benchmark::State& state) {
    const int b = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto t = juggle::capped_card_total(b, 2);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_CappedCardTotal)->Arg(25)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
