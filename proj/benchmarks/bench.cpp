#include <benchmark/benchmark.h>

#include <random>

#include "tqft/homfly.hpp"
#include "tqft/laurent.hpp"
#include "tqft/matrix.hpp"
#include "tqft/nfa.hpp"
#include "tqft/tqft.hpp"

namespace {

template <tqft::Semiring R, typename Gen>
tqft::Matrix<R> random_matrix(int n, Gen element) {
    std::mt19937 rng(7);
    tqft::Matrix<R> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = element(rng);
    return m;
}

void BM_BoolCompose(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto m = random_matrix<tqft::Bool>(n, [](std::mt19937& rng) {
        return tqft::Bool{rng() % 4 == 0};
    });
    for (auto _ : state) {
        auto r = tqft::compose(m, m);
        benchmark::DoNotOptimize(r);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_BoolCompose)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_TropicalCompose(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto m = random_matrix<tqft::Tropical>(n, [](std::mt19937& rng) {
        return rng() % 4 == 0 ? tqft::Tropical::zero()
                              : tqft::Tropical::of(static_cast<std::int64_t>(rng() % 100));
    });
    for (auto _ : state) {
        auto r = tqft::compose(m, m);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_TropicalCompose)->Arg(16)->Arg(32);

void BM_QBinom(benchmark::State& state) {
    for (auto _ : state) {
        auto b = tqft::qbinom(12, 6);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_QBinom);

void BM_RegexCompileAndCheck(benchmark::State& state) {
    for (auto _ : state) {
        auto nfa = tqft::compile_regex(tqft::parse_regex("(a+b)*b(a+b)(a+b)"));
        auto report = tqft::check_correspondence(nfa, 6);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_RegexCompileAndCheck);

void BM_HomflyFigure8(benchmark::State& state) {
    auto d = tqft::braid_closure(3, {1, -2, 1, -2});
    for (auto _ : state) {
        auto p = tqft::homfly(d);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_HomflyFigure8);

void BM_HomflyEightCrossings(benchmark::State& state) {
    auto d = tqft::braid_closure(4, {1, -2, 3, -2, 1, -2, 3, -2});
    for (auto _ : state) {
        auto p = tqft::homfly(d);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_HomflyEightCrossings);

}  // namespace

BENCHMARK_MAIN();
