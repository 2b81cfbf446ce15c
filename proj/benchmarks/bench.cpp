#include <benchmark/benchmark.h>

#include "tautkit/correlators.hpp"
#include "tautkit/graphs.hpp"
#include "tautkit/hurwitz.hpp"
#include "tautkit/invariance.hpp"

using namespace tautkit;

static void BM_HurwitzEnumeration(benchmark::State& state) {
    Partition alpha({3, 1});
    for (auto _ : state) {
        Rational h = hurwitz_bruteforce({static_cast<int>(state.range(0)), alpha, true});
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_HurwitzEnumeration)->Arg(0)->Arg(1)->Arg(2);

static void BM_HurwitzClassAlgebra(benchmark::State& state) {
    Partition alpha({4, 2, 2});
    for (auto _ : state) {
        Rational h = hurwitz_classalg({2, alpha, true});
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_HurwitzClassAlgebra);

static void BM_CorrelatorTableFill(benchmark::State& state) {
    for (auto _ : state) {
        IntersectionTable t;
        Rational r = t.correlator(3, {static_cast<int>(state.range(0))});
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_CorrelatorTableFill)->Arg(7);

static void BM_StrataEnumeration(benchmark::State& state) {
    for (auto _ : state) {
        auto strata = enumerate_stable(2, 1);
        benchmark::DoNotOptimize(strata.size());
    }
}
BENCHMARK(BM_StrataEnumeration);

static void BM_InvarianceOperator(benchmark::State& state) {
    GraphSum rel = cross_ratio_relation_m05();
    for (auto _ : state) {
        GraphSum image = rl_apply(rel, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(image.term_count());
    }
}
BENCHMARK(BM_InvarianceOperator)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
