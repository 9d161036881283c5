// Serial reference against OpenMP kernels on the hot paths.

#include "nclab/jobs.hpp"
#include "nclab/ncpart.hpp"
#include "nclab/nonnest.hpp"
#include "nclab/posetcore.hpp"

#include <benchmark/benchmark.h>

using namespace nclab;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& state) { state.SetLabel(std::string(to_string(exec_of(state)))); }

void BM_RelationMatrix(benchmark::State& state) {
    const auto elements = enumerate_nc(Params(1, 9, 1));
    for (auto _ : state) {
        auto rows = kernels::relation_matrix(
            elements.size(), [&](std::size_t a, std::size_t b) { return refines(elements[a], elements[b]); },
            exec_of(state));
        benchmark::DoNotOptimize(rows.data());
    }
    label(state);
}

void BM_Moebius(benchmark::State& state) {
    const auto poset = build_refinement_poset(Params(1, 8, 1), Exec::parallel);
    for (auto _ : state) {
        // A fresh copy of the order carries an empty cache.
        const FinitePoset order(
            kernels::relation_matrix_serial(poset.order.size(),
                                            [&](std::size_t a, std::size_t b) { return poset.order.leq(a, b); }),
            [&] {
                std::vector<int> r;
                for (std::size_t a = 0; a < poset.order.size(); ++a) r.push_back(poset.order.rank(a));
                return r;
            }());
        order.precompute_moebius(exec_of(state));
        benchmark::DoNotOptimize(order.moebius_row(0).data());
    }
    label(state);
}

void BM_GeometricChains(benchmark::State& state) {
    for (auto _ : state) {
        auto chains = enumerate_nn(Params(3, 5, 1), ComplementVariant::paper, exec_of(state));
        benchmark::DoNotOptimize(chains.data());
    }
    label(state);
}

void BM_Sweep(benchmark::State& state) {
    const auto grid = parse_range("m=1..3,n=1..6,t=1..n,mn<=8");
    for (auto _ : state) {
        auto rows = run_sweep("mtriangle", grid, JobOptions{ComplementVariant::paper, Exec::serial}, exec_of(state));
        benchmark::DoNotOptimize(rows.data());
    }
    label(state);
}

} // namespace

BENCHMARK(BM_RelationMatrix)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Moebius)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeometricChains)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
