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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "checks.hpp"
#include "config.hpp"

namespace fdxsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSelftestFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInfeasible = 3;

inline constexpr const char* kCsvHeader = "axis,series,mean_sumrate_bps_hz,stderr,trials,failed_trials";
inline constexpr const char* kVersion = "1.0.0";

struct RunOptions {
    std::string config_path;
    std::vector<std::string> overrides;
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
    std::filesystem::path out_dir = ".";
};

struct FigureOptions {
    std::filesystem::path out_dir = ".";
    unsigned threads = 1;
    std::optional<std::size_t> trials;
    std::optional<std::uint64_t> seed;
};

struct SelftestOptions {
    std::size_t munkres_matrices = 1000;
    std::size_t hessian_points = 10000;
    std::size_t gradient_instances = 100;
    std::size_t distribution_samples = 1000000;
    std::uint64_t seed = 7;
    checks::ObjectiveFn objective;  // empty: the library objective
};

inline const std::vector<std::string> kFigureNames = {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7"};

/// Preset sweep for one figure name. Throws ParseError for an unknown name.
RunSpec figure_preset(const std::string& name);

/// One data row per (axis point, series), axis-major.
std::string format_csv(const SweepResult& result);

/// sweep.csv and manifest.json in options.out_dir.
int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err);

/// <name>.csv and <name>_manifest.json per figure; "all" expands to fig2..fig7.
int cmd_figures(const std::vector<std::string>& which, const FigureOptions& options, std::ostream& out,
                std::ostream& err);

int cmd_selftest(const SelftestOptions& options, std::ostream& out);

}  // namespace fdxsim::cli
