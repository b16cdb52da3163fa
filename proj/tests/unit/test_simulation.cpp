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

#include <cmath>
#include <limits>
#include <numeric>

#include <gtest/gtest.h>

#include "fdxsim/fdxsim.hpp"

namespace fdxsim {
namespace {

ScenarioConfig small_config(std::size_t trials = 40) {
    ScenarioConfig c;
    c.trials = trials;
    return c;
}

TEST(Simulation, ZeroUserPowerGivesZeroRate) {
    ScenarioConfig c = small_config();
    c.pmax_user_dbm = -std::numeric_limits<double>::infinity();
    c.rmin_coop = c.rmin_nc = 0.0;
    const TrialResult r = run_trial(c, 0);
    EXPECT_FALSE(r.failed) << r.error;
    EXPECT_EQ(r.sum_rate, 0.0);

    c.rmin_coop = 0.1;  // zero budget cannot meet a positive floor
    const TrialResult f = run_trial(c, 0);
    EXPECT_TRUE(f.failed);
    EXPECT_EQ(f.sum_rate, 0.0);
}

TEST(Simulation, PairedSiDominance) {
    ScenarioConfig c = small_config();
    for (std::size_t t = 0; t < 100; ++t) {
        c.si.enabled = false;
        const TrialResult off = run_trial(c, t);
        c.si.enabled = true;
        const TrialResult on = run_trial(c, t);
        ASSERT_FALSE(off.failed);
        ASSERT_FALSE(on.failed);
        EXPECT_GE(off.sum_rate, on.sum_rate) << "trial " << t;
    }
}

TEST(Simulation, TrialIsDeterministicAndAdditive) {
    const ScenarioConfig c = small_config();
    for (std::size_t t = 0; t < 20; ++t) {
        const TrialResult a = run_trial(c, t);
        const TrialResult b = run_trial(c, t);
        EXPECT_EQ(a.sum_rate, b.sum_rate);
        EXPECT_EQ(a.per_user_rates, b.per_user_rates);
        EXPECT_EQ(a.selection.relay_of, b.selection.relay_of);
        EXPECT_EQ(a.solver.iterations, b.solver.iterations);
        EXPECT_NEAR(std::accumulate(a.per_user_rates.begin(), a.per_user_rates.end(), 0.0), a.sum_rate, 1e-9);
        EXPECT_EQ(a.assignment.cooperative_cells + a.assignment.direct_cells, c.n);
    }
}

TEST(Simulation, ThreadCountDoesNotChangeResults) {
    const ScenarioConfig c = small_config(30);
    const auto serial = run_trials(c, 1);
    const auto parallel = run_trials(c, 4);
    ASSERT_EQ(serial.size(), parallel.size());
    for (std::size_t t = 0; t < serial.size(); ++t) {
        EXPECT_EQ(serial[t].trial_index, t);
        EXPECT_EQ(parallel[t].trial_index, t);
        EXPECT_EQ(serial[t].sum_rate, parallel[t].sum_rate);
    }
}

TEST(Simulation, SweepShapeAndReproducibility) {
    const ScenarioConfig c = small_config(20);
    SweepPlan plan;
    plan.pmax_user_dbm = {0.0, 10.0, 20.0};
    plan.series = {{.label = "off", .scheme = {}, .si_enabled = false, .k1 = {}, .k2 = {}},
                   {.label = "small", .scheme = SelectionScheme::ShortestTotalDistance, .si_enabled = {}, .k1 = 2,
                    .k2 = 2}};
    const SweepResult a = run_sweep(c, plan, 1);
    const SweepResult b = run_sweep(c, plan, 3);
    ASSERT_EQ(a.points.size(), 6u);
    for (std::size_t p = 0; p < a.points.size(); ++p) {
        EXPECT_EQ(a.points[p].axis, plan.pmax_user_dbm[p / 2]);
        EXPECT_EQ(a.points[p].series, plan.series[p % 2].label);
        EXPECT_EQ(a.points[p].trials + a.points[p].failed_trials, 20u);
        EXPECT_EQ(a.points[p].mean_sum_rate, b.points[p].mean_sum_rate);
        EXPECT_EQ(a.points[p].stderr_sum_rate, b.points[p].stderr_sum_rate);
        const MeanStderr ms = mean_and_stderr(a.points[p].trial_sum_rates);
        EXPECT_EQ(ms.mean, a.points[p].mean_sum_rate);
    }
}

TEST(Simulation, EmptySweepIsRejected) {
    EXPECT_THROW(run_sweep(small_config(), SweepPlan{}, 1), ConfigError);
}

TEST(Simulation, MeanAndStderrSkipNonFinite) {
    const std::vector<double> v = {1.0, 2.0, std::nan(""), 3.0, 4.0};
    const MeanStderr ms = mean_and_stderr(v);
    EXPECT_EQ(ms.count, 4u);
    EXPECT_DOUBLE_EQ(ms.mean, 2.5);
    // Sample variance 5/3 over four points.
    EXPECT_DOUBLE_EQ(ms.stderr_, std::sqrt(5.0 / 3.0 / 4.0));
}

TEST(Simulation, QosRelaxationIsRareAtDefaults) {
    const ScenarioConfig c = small_config(100);
    std::size_t relaxed = 0;
    for (const TrialResult& r : run_trials(c, 2)) relaxed += r.solver.qos_relaxed ? 1 : 0;
    EXPECT_LT(relaxed, 50u);
}

TEST(Simulation, ValidateRejectsBadFields) {
    ScenarioConfig c;
    EXPECT_NO_THROW(c.validate());
    c.k1 = 0;
    EXPECT_THROW(c.validate(), ConfigError);
    c = ScenarioConfig{};
    c.k1 = 5;
    EXPECT_THROW(c.validate(), ConfigError);
    c.exclusive_relays = false;
    EXPECT_NO_THROW(c.validate());
    c = ScenarioConfig{};
    c.pmax_bs_dbm = std::numeric_limits<double>::infinity();
    EXPECT_THROW(c.validate(), ConfigError);
    c = ScenarioConfig{};
    c.rmin_nc = -1.0;
    EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Simulation, BudgetsFromConfig) {
    ScenarioConfig c;
    c.pmax_user_dbm = 20.0;
    const Budgets b = c.budgets();
    EXPECT_DOUBLE_EQ(b.pmax_coop, 0.1);
    EXPECT_DOUBLE_EQ(b.pmax_nc, 0.1);
    EXPECT_EQ(b.rmin_coop, 0.1);
}

}  // namespace
}  // namespace fdxsim
