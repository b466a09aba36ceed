// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Serial reference vs OpenMP kernels. Run with --benchmark_counters_tabular=true.

#include "skyshield/kernels.hpp"
#include "skyshield/placement.hpp"
#include "skyshield/scenarios.hpp"

#include <benchmark/benchmark.h>

using namespace skyshield;

namespace {

ExpBConfig bench_config(std::int64_t trials)
{
    ExpBConfig cfg;
    cfg.trials = static_cast<std::uint64_t>(trials);
    return cfg;
}

void BM_ExpBTrials_Serial(benchmark::State& state)
{
    const ExpBModel model(bench_config(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(exp_b_trial_matrix_serial(model));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ExpBTrials_OpenMP(benchmark::State& state)
{
    const ExpBModel model(bench_config(state.range(0)));
    const kernels::Parallelism par{static_cast<int>(state.range(1))};
    for (auto _ : state)
        benchmark::DoNotOptimize(exp_b_trial_matrix(model, par));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_GridSearch_Serial(benchmark::State& state)
{
    const ExpAConfig cfg;
    const ExpAObjective f(cfg, dbm_to_watts(15.0), true);
    for (auto _ : state)
        benchmark::DoNotOptimize(grid_argmax_1d_serial(std::cref(f), cfg.search));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.search.points().size()));
}

void BM_GridSearch_OpenMP(benchmark::State& state)
{
    const ExpAConfig cfg;
    const ExpAObjective f(cfg, dbm_to_watts(15.0), true);
    const kernels::Parallelism par{static_cast<int>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(grid_argmax_1d(std::cref(f), cfg.search, par));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.search.points().size()));
}

} // namespace

BENCHMARK(BM_ExpBTrials_Serial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpBTrials_OpenMP)->Args({2000, 1})->Args({2000, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridSearch_Serial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GridSearch_OpenMP)->Arg(1)->Arg(0)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
