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

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace fdxsim::cli;

    CLI::App app{"Full-duplex cooperative OFDMA uplink simulator"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    RunOptions run;
    std::uint64_t run_seed = 0;
    auto* run_cmd = app.add_subcommand("run", "Run one sweep from a config file or manifest");
    run_cmd->add_option("--config", run.config_path, "INI config or manifest.json")->required();
    run_cmd->add_option("--set", run.overrides, "Dotted key=value override (repeatable)");
    auto* run_seed_opt = run_cmd->add_option("--seed", run_seed, "Base seed (overrides config and FDXSIM_SEED)");
    run_cmd->add_option("--threads", run.threads, "Worker thread cap")->check(CLI::PositiveNumber);
    run_cmd->add_option("--out", run.out_dir, "Output directory");

    FigureOptions fig;
    std::vector<std::string> figures;
    std::size_t fig_trials = 0;
    std::uint64_t fig_seed = 0;
    auto* fig_cmd = app.add_subcommand("figures", "Run the preset sweeps behind fig2..fig7");
    fig_cmd->add_option("which", figures, "fig2..fig7 or all")->required();
    auto* fig_trials_opt = fig_cmd->add_option("--trials", fig_trials, "Trials per point")->check(CLI::PositiveNumber);
    auto* fig_seed_opt = fig_cmd->add_option("--seed", fig_seed, "Base seed");
    fig_cmd->add_option("--threads", fig.threads, "Worker thread cap")->check(CLI::PositiveNumber);
    fig_cmd->add_option("--out", fig.out_dir, "Output directory");

    SelftestOptions self;
    auto* self_cmd = app.add_subcommand("selftest", "Run the oracle suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (*run_cmd) {
        if (*run_seed_opt) run.seed = run_seed;
        return cmd_run(run, std::cout, std::cerr);
    }
    if (*fig_cmd) {
        if (*fig_trials_opt) fig.trials = fig_trials;
        if (*fig_seed_opt) fig.seed = fig_seed;
        return cmd_figures(figures, fig, std::cout, std::cerr);
    }
    if (*self_cmd) return cmd_selftest(self, std::cout);
    return kExitUsage;
}
