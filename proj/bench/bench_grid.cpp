// Compares the serial and OpenMP grid scans and the batch equilibrium solver.
// Run with --benchmark_min_time=... as usual; OMP_NUM_THREADS controls the
// parallel variants.

#include <vector>

#include <benchmark/benchmark.h>

#include "gdplab/economy.hpp"
#include "gdplab/grid_search.hpp"

namespace {

gdplab::EconomyConfig island(double total_labor) {
    gdplab::EconomyConfig config;
    config.sectors = {
        gdplab::SectorSpec{"A", 2.0 / 3.0, 0.055, 1.6990, 1.0, 2.0},
        gdplab::SectorSpec{"B", 2.0 / 3.0, 0.055, 0.0, 5.0, 1.5},
    };
    config.total_labor = total_labor;
    return config;
}

void BM_grid_scan_serial(benchmark::State& state) {
    const gdplab::EconomyConfig config = island(static_cast<double>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gdplab::best_bisector_allocation_serial(config));
    }
    state.SetItemsProcessed(state.iterations() * (state.range(0) + 1));
}

void BM_grid_scan_parallel(benchmark::State& state) {
    const gdplab::EconomyConfig config = island(static_cast<double>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gdplab::best_bisector_allocation_parallel(config));
    }
    state.SetItemsProcessed(state.iterations() * (state.range(0) + 1));
}

std::vector<gdplab::EconomyConfig> config_batch(int count) {
    std::vector<gdplab::EconomyConfig> configs;
    configs.reserve(count);
    for (int i = 0; i < count; ++i) {
        gdplab::EconomyConfig config = island(100000.0);
        config.sectors[0].tech = 1.0 + 0.01 * i;
        config.sectors[1].tech = 1.0 + 0.005 * i;
        configs.push_back(config);
    }
    return configs;
}

void BM_batch_solve_loop(benchmark::State& state) {
    const auto configs = config_batch(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (const auto& config : configs)
            benchmark::DoNotOptimize(gdplab::solve_equilibrium(config));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_batch_solve_parallel(benchmark::State& state) {
    const auto configs = config_batch(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gdplab::solve_equilibria(configs));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_grid_scan_serial)->Arg(10000)->Arg(100000);
BENCHMARK(BM_grid_scan_parallel)->Arg(10000)->Arg(100000);
BENCHMARK(BM_batch_solve_loop)->Arg(64)->Arg(512);
BENCHMARK(BM_batch_solve_parallel)->Arg(64)->Arg(512);

BENCHMARK_MAIN();
