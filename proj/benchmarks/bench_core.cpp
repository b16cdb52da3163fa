/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The fdxsim Authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <vector>

#include "fdxsim/fdxsim.hpp"
#include "fdxsim/oracles.hpp"

namespace {

using namespace fdxsim;

void BM_Munkres(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    RngStream rng(1);
    std::vector<double> values(n * n);
    for (double& v : values) v = rng.uniform(0.0, 10.0);
    for (auto _ : state) benchmark::DoNotOptimize(munkres_maximize(values, n));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Munkres)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNCubed);

void BM_Objective(benchmark::State& state) {
    ScenarioConfig config;
    config.n = static_cast<std::size_t>(state.range(0));
    const oracle::Instance in = oracle::make_instance(config, 0);
    const PowerProfile p = equal_power_baseline(in.assignment, in.budgets);
    for (auto _ : state) benchmark::DoNotOptimize(objective_and_gradient(p, in.assignment, in.gains, in.bs));
}
BENCHMARK(BM_Objective)->Arg(8)->Arg(32)->Arg(128);

void BM_Solve(benchmark::State& state) {
    ScenarioConfig config;
    config.n = static_cast<std::size_t>(state.range(0));
    config.si.enabled = state.range(1) != 0;
    const oracle::Instance in = oracle::make_instance(config, 0);
    for (auto _ : state) benchmark::DoNotOptimize(solve(in.assignment, in.gains, in.bs, in.budgets));
}
BENCHMARK(BM_Solve)->ArgsProduct({{8, 32, 64}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_RunTrial(benchmark::State& state) {
    ScenarioConfig config;
    config.k1 = config.k2 = static_cast<std::size_t>(state.range(0));
    std::size_t trial = 0;
    for (auto _ : state) benchmark::DoNotOptimize(run_trial(config, trial++));
}
BENCHMARK(BM_RunTrial)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
