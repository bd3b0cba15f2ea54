// Serial reference loops against their OpenMP counterparts.

#include "rat/kernels.hpp"
#include "rat/markov.hpp"
#include "rat/tableau.hpp"

#include <benchmark/benchmark.h>

using namespace rat;

namespace {

template <auto Kernel>
void sector_weights(benchmark::State& state) {
    const auto words = words_with(static_cast<std::size_t>(state.range(0)), 1);
    const Limits limits;
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(words, limits));
}

template <auto Kernel>
void expand_frontier(benchmark::State& state) {
    const auto tilings = enumerate_tilings(make_diagram(Word::parse("DDDAAEEE"))).tilings;
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(tilings));
}

template <auto Kernel>
void brute_force(benchmark::State& state) {
    TableauFrame frame(minimal_tiling(make_diagram(Word::parse("DDAAEE"))));
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(frame));
}

template <auto Kernel>
void solve(benchmark::State& state) {
    const ChainSpec c = build_chain(static_cast<std::size_t>(state.range(0)), 1,
                                    {Rational(1, 2), Rational(1, 3), Rational(1, 5)});
    const std::size_t m = c.states.size();
    RationalMatrix a(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) a[i][j] = c.P[j][i] - (i == j ? 1 : 0);
    a[m - 1].assign(m, 1);
    std::vector<Rational> b(m, 0);
    b[m - 1] = 1;
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
}

}  // namespace

BENCHMARK(sector_weights<kernels::serial::sector_weights>)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(sector_weights<kernels::parallel::sector_weights>)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(expand_frontier<kernels::serial::expand_frontier>)->Unit(benchmark::kMillisecond);
BENCHMARK(expand_frontier<kernels::parallel::expand_frontier>)->Unit(benchmark::kMillisecond);
BENCHMARK(brute_force<kernels::serial::brute_force_marks>)->Unit(benchmark::kMillisecond);
BENCHMARK(brute_force<kernels::parallel::brute_force_marks>)->Unit(benchmark::kMillisecond);
BENCHMARK(solve<kernels::serial::solve>)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(solve<kernels::parallel::solve>)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
