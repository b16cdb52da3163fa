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

#include "fdxsim/simulation.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <thread>

#include "fdxsim/errors.hpp"
#include "fdxsim/units.hpp"

namespace fdxsim {

void ScenarioConfig::validate() const {
    if (k1 < 1) throw ConfigError("k1 must be >= 1");
    if (k2 < 1) throw ConfigError("k2 must be >= 1");
    if (n < 1) throw ConfigError("n must be >= 1");
    if (trials < 1) throw ConfigError("trials must be >= 1");
    if (!(w_hz > 0.0) || !std::isfinite(w_hz)) throw ConfigError("w_hz must be a positive number");
    if (!std::isfinite(n0_dbm_hz)) throw ConfigError("n0_dbm_hz must be finite");
    // -inf dBm is a legal way to switch a transmitter off.
    const auto power_ok = [](double dbm) { return !std::isnan(dbm) && dbm < std::numeric_limits<double>::infinity(); };
    if (!power_ok(pmax_user_dbm)) throw ConfigError("pmax_user_dbm must be finite or -inf");
    if (!power_ok(pmax_bs_dbm)) throw ConfigError("pmax_bs_dbm must be finite or -inf");
    if (!(rmin_coop >= 0.0) || !(rmin_nc >= 0.0)) throw ConfigError("minimum rates must be >= 0");
    if (exclusive_relays && k1 > k2) {
        throw ConfigError("exclusive relays need k1 <= k2 (k1=" + std::to_string(k1) +
                          ", k2=" + std::to_string(k2) + ")");
    }
    geometry.validate();
    si.validate();
}

Budgets ScenarioConfig::budgets() const {
    const double pmax = dbm_to_watts(pmax_user_dbm);
    return {.pmax_coop = pmax, .pmax_nc = pmax, .rmin_coop = rmin_coop, .rmin_nc = rmin_nc};
}

TrialResult run_trial(const ScenarioConfig& config, std::size_t trial_index) {
    TrialResult result;
    result.trial_index = trial_index;
    try {
        config.validate();
        RngStream rng(config.seed, trial_index);
        const Topology topology = sample_topology(rng, config.geometry, config.k1, config.k2);
        const double n0w = noise_power_watts(config.n0_dbm_hz, config.w_hz);
        const ChannelRealization channel = make_realization(topology, config.n, config.si, n0w, rng);
        const NormalizedGains gains = normalized_gains(channel, topology);
        const BsPowerPolicy bs = BsPowerPolicy::uniform(dbm_to_watts(config.pmax_bs_dbm), config.n);
        const Budgets budgets = config.budgets();
        const ProvisionalPowers provisional = ProvisionalPowers::equal_split(budgets.pmax_coop, config.n);

        result.selection =
            select_all(config.scheme, topology, gains, provisional, bs, config.exclusive_relays);
        const PairValueMatrix matrix =
            build_pair_matrix(result.selection, gains, provisional, bs, SinrMode::Exact);
        const std::vector<std::size_t> pairing = munkres_maximize(matrix.value, matrix.n);
        Assignment assignment = finalize_assignment(matrix, pairing);
        result.assignment.repaired_cells =
            repair_qos(assignment, result.selection, gains, provisional, bs, SinrMode::Exact,
                       budgets.rmin_coop > 0.0, budgets.rmin_nc > 0.0);
        result.assignment.cooperative_cells = assignment.cooperative_cells();
        result.assignment.direct_cells = assignment.n - result.assignment.cooperative_cells;

        const PowerSolution solution = solve(assignment, gains, bs, budgets, SinrMode::Approximate);
        result.solver = solution.report;
        result.per_user_rates = per_user_rates(assignment, solution.powers, gains, bs, SinrMode::Exact);
        result.sum_rate = total_sum_rate(assignment, solution.powers, gains, bs, SinrMode::Exact);
        if (!solution.report.feasible) {
            result.failed = true;
            result.error = "power allocation returned an infeasible point";
        }
    } catch (const std::exception& e) {
        result.failed = true;
        result.error = e.what();
    }
    return result;
}

std::vector<TrialResult> run_trials(const ScenarioConfig& config, unsigned threads) {
    std::vector<TrialResult> results(config.trials);
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(config.trials)));
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t t = next++; t < config.trials; t = next++) results[t] = run_trial(config, t);
    };
    if (workers == 1) {
        work();
        return results;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    pool.clear();  // joins
    return results;
}

ScenarioConfig SeriesSpec::apply(ScenarioConfig base) const {
    if (scheme) base.scheme = *scheme;
    if (si_enabled) base.si.enabled = *si_enabled;
    if (k1) base.k1 = *k1;
    if (k2) base.k2 = *k2;
    return base;
}

MeanStderr mean_and_stderr(std::span<const double> samples) {
    MeanStderr out;
    double sum = 0.0;
    for (double s : samples) {
        if (!std::isfinite(s)) continue;
        sum += s;
        ++out.count;
    }
    if (out.count == 0) return out;
    out.mean = sum / static_cast<double>(out.count);
    if (out.count < 2) return out;
    double ss = 0.0;
    for (double s : samples) {
        if (std::isfinite(s)) ss += (s - out.mean) * (s - out.mean);
    }
    const auto count = static_cast<double>(out.count);
    out.stderr_ = std::sqrt(ss / (count - 1.0) / count);
    return out;
}

SweepResult run_sweep(const ScenarioConfig& config, const SweepPlan& plan, unsigned threads) {
    if (plan.pmax_user_dbm.empty()) throw ConfigError("sweep needs at least one power point");
    if (plan.series.empty()) throw ConfigError("sweep needs at least one series");

    SweepResult result;
    for (double pmax : plan.pmax_user_dbm) {
        for (const SeriesSpec& series : plan.series) {
            ScenarioConfig cfg = series.apply(config);
            cfg.pmax_user_dbm = pmax;
            cfg.validate();
            const std::vector<TrialResult> trials = run_trials(cfg, threads);

            SweepPoint point;
            point.axis = pmax;
            point.series = series.label;
            point.trial_sum_rates.reserve(trials.size());
            for (const TrialResult& t : trials) {
                if (t.failed) {
                    ++point.failed_trials;
                    point.trial_sum_rates.push_back(std::numeric_limits<double>::quiet_NaN());
                    continue;
                }
                point.qos_relaxed_trials += t.solver.qos_relaxed;
                point.trial_sum_rates.push_back(t.sum_rate);
            }
            const MeanStderr stats = mean_and_stderr(point.trial_sum_rates);
            point.mean_sum_rate = stats.mean;
            point.stderr_sum_rate = stats.stderr_;
            point.trials = stats.count;
            result.points.push_back(std::move(point));
        }
    }
    return result;
}

}  // namespace fdxsim
