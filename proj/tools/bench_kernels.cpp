// Benchmarks comparing the serial reference kernels against their OpenMP
// variants on representative inputs.

#include <benchmark/benchmark.h>

#include <random>

#include "hellylab/complexes.hpp"
#include "hellylab/helly.hpp"
#include "hellylab/metric.hpp"
#include "hellylab/tightspan.hpp"

using namespace hellylab;

namespace {

FiniteMetric bench_metric(int n) {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> num(1, 12);
    std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d[i][j] = d[j][i] = Rat(num(rng));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) d[i][j] = std::min(d[i][j], Rat(d[i][k] + d[k][j]));
    return FiniteMetric::require(std::move(d));
}

void four_point_delta_bench(benchmark::State& state, Exec exec) {
    auto m = bench_metric(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto d = four_point_delta(m, exec);
        benchmark::DoNotOptimize(d);
    }
}

void dim_at_most_bench(benchmark::State& state, Exec exec) {
    auto m = bench_metric(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto r = dim_at_most(m, 1, exec);
        benchmark::DoNotOptimize(r.first);
    }
}

void berge_bench(benchmark::State& state, Exec exec) {
    auto g = gen_king({static_cast<int>(state.range(0)), static_cast<int>(state.range(0))});
    for (auto _ : state) {
        auto v = is_helly(g, IsHellyMethod::BergeTriples, 12, 8, exec);
        benchmark::DoNotOptimize(v.helly);
    }
}

void stability_bench(benchmark::State& state, Exec exec) {
    auto g = gen_king({static_cast<int>(state.range(0)), static_cast<int>(state.range(0))});
    for (auto _ : state) {
        auto b = interval_stability_bound(g, exec);
        benchmark::DoNotOptimize(b);
    }
}

}  // namespace

BENCHMARK_CAPTURE(four_point_delta_bench, serial, Exec::Serial)->Arg(16)->Arg(24);
BENCHMARK_CAPTURE(four_point_delta_bench, parallel, Exec::Parallel)->Arg(16)->Arg(24);
BENCHMARK_CAPTURE(dim_at_most_bench, serial, Exec::Serial)->Arg(8)->Arg(10);
BENCHMARK_CAPTURE(dim_at_most_bench, parallel, Exec::Parallel)->Arg(8)->Arg(10);
BENCHMARK_CAPTURE(berge_bench, serial, Exec::Serial)->Arg(4)->Arg(5);
BENCHMARK_CAPTURE(berge_bench, parallel, Exec::Parallel)->Arg(4)->Arg(5);
BENCHMARK_CAPTURE(stability_bench, serial, Exec::Serial)->Arg(5)->Arg(6);
BENCHMARK_CAPTURE(stability_bench, parallel, Exec::Parallel)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
