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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fdxsim/assignment.hpp"
#include "fdxsim/channel.hpp"
#include "fdxsim/geometry.hpp"
#include "fdxsim/power_allocation.hpp"
#include "fdxsim/relay_selection.hpp"

namespace fdxsim {

/// Everything needed to reproduce one Monte Carlo experiment.
struct ScenarioConfig {
    std::size_t k1 = 4;  // far users
    std::size_t k2 = 4;  // near users / candidate relays
    std::size_t n = 8;   // subcarriers
    double w_hz = 20e3;
    double n0_dbm_hz = -174.0;
    double pmax_user_dbm = 20.0;
    double pmax_bs_dbm = 40.0;
    CellGeometry geometry{};
    SiConfig si{.enabled = false, .residual_factor = 1.0};
    SelectionScheme scheme = SelectionScheme::BestSinrWithSi;
    bool exclusive_relays = true;
    double rmin_coop = 0.1;
    double rmin_nc = 0.1;
    std::size_t trials = 500;
    std::uint64_t seed = 20260101;

    /// Throws ConfigError describing the first offending field.
    void validate() const;

    /// Power budgets in watts plus the QoS floors.
    Budgets budgets() const;
};

struct AssignmentSummary {
    std::size_t cooperative_cells = 0;
    std::size_t direct_cells = 0;
    std::size_t repaired_cells = 0;
};

struct TrialResult {
    std::size_t trial_index = 0;
    double sum_rate = 0.0;               // bit/s/Hz, Exact SINR
    std::vector<double> per_user_rates;  // far users, then near users
    SelectionResult selection;
    AssignmentSummary assignment;
    SolverReport solver;
    bool failed = false;
    std::string error;
};

/// Full pipeline for one trial: place nodes, draw channels, select relays, build
/// and match the pair table, allocate power, score with the Exact SINR.
/// Deterministic in (config, trial_index). Module errors mark the trial failed.
TrialResult run_trial(const ScenarioConfig& config, std::size_t trial_index);

/// Runs config.trials trials on up to `threads` workers. Results are ordered by
/// trial index and independent of the thread count.
std::vector<TrialResult> run_trials(const ScenarioConfig& config, unsigned threads = 1);

/// One curve of a sweep: optional overrides applied to the base config.
struct SeriesSpec {
    std::string label;
    std::optional<SelectionScheme> scheme;
    std::optional<bool> si_enabled;
    std::optional<std::size_t> k1;
    std::optional<std::size_t> k2;

    ScenarioConfig apply(ScenarioConfig base) const;
};

/// User maximum power on the horizontal axis, one curve per series.
struct SweepPlan {
    std::vector<double> pmax_user_dbm;
    std::vector<SeriesSpec> series;
};

struct SweepPoint {
    double axis = 0.0;
    std::string series;
    double mean_sum_rate = 0.0;
    double stderr_sum_rate = 0.0;
    std::size_t trials = 0;         // successful trials
    std::size_t failed_trials = 0;
    std::size_t qos_relaxed_trials = 0;
    std::vector<double> trial_sum_rates;  // by trial index; NaN for failed trials
};

struct SweepResult {
    std::vector<SweepPoint> points;  // axis-major, then series order
};

/// Every (axis, series) point reuses the same per-trial seeds.
/// Throws ConfigError for an empty plan.
SweepResult run_sweep(const ScenarioConfig& config, const SweepPlan& plan, unsigned threads = 1);

struct MeanStderr {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::size_t count = 0;
};

/// Mean and standard error of the finite entries.
MeanStderr mean_and_stderr(std::span<const double> samples);

}  // namespace fdxsim
