// Serial vs OpenMP kernels on omega^X stage samples.

#include <benchmark/benchmark.h>

#include <map>
#include <memory>

#include "bh/bh_limit.hpp"
#include "bh/dilator_lib.hpp"
#include "bh/kernels.hpp"
#include "bh/verify.hpp"

using namespace bh;

namespace {

struct Fixture {
    StageTower tower{make_omega_power()};
    std::vector<Term> items;
    kernels::OrderMatrix matrix;

    explicit Fixture(std::size_t n) {
        items = tower.stage(3).enumerate(n).items;
        matrix = kernels::order_matrix_serial<Term>(items, tower.stage(3).comparator());
    }
};

Fixture& fixture(std::size_t n) {
    static std::map<std::size_t, std::unique_ptr<Fixture>> cache;
    auto& f = cache[n];
    if (!f) f = std::make_unique<Fixture>(n);
    return *f;
}

// unmemoized comparisons, so both variants do the same work every iteration
void BM_OrderMatrixSerial(benchmark::State& state) {
    auto& f = fixture(static_cast<std::size_t>(state.range(0)));
    const BHSystem& X = f.tower.stage(2);
    auto cmp = [&](Term a, Term b) { return theta_compare(X, a, b); };
    for (auto _ : state) benchmark::DoNotOptimize(kernels::order_matrix_serial<Term>(f.items, cmp));
}

void BM_OrderMatrixParallel(benchmark::State& state) {
    auto& f = fixture(static_cast<std::size_t>(state.range(0)));
    const BHSystem& X = f.tower.stage(2);
    auto cmp = [&](Term a, Term b) { return theta_compare(X, a, b); };
    for (auto _ : state) benchmark::DoNotOptimize(kernels::order_matrix_parallel<Term>(f.items, cmp));
}

void BM_LinearitySerial(benchmark::State& state) {
    auto& f = fixture(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::linearity_serial(f.matrix));
}

void BM_LinearityParallel(benchmark::State& state) {
    auto& f = fixture(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::linearity_parallel(f.matrix));
}

void BM_DilatorLaws(benchmark::State& state) {
    const auto T = make_omega_power();
    const auto exec = state.range(0) == 0 ? Exec::Serial : Exec::Parallel;
    for (auto _ : state) benchmark::DoNotOptimize(check_dilator_laws(*T, 4, 50, exec));
}

}  // namespace

BENCHMARK(BM_OrderMatrixSerial)->Arg(50)->Arg(150);
BENCHMARK(BM_OrderMatrixParallel)->Arg(50)->Arg(150);
BENCHMARK(BM_LinearitySerial)->Arg(50)->Arg(150);
BENCHMARK(BM_LinearityParallel)->Arg(50)->Arg(150);
BENCHMARK(BM_DilatorLaws)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
