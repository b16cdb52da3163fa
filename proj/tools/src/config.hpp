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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fdxsim/simulation.hpp"

namespace fdxsim::cli {

/// What the curves of a sweep differ in.
enum class Vary { None, Si, Scheme, Users };

struct SweepSpec {
    std::vector<double> pmax_dbm;     // empty: a single point at config.pmax_user_dbm
    Vary vary = Vary::None;
    std::vector<std::string> values;  // series values for `vary`
};

/// A scenario plus the sweep to run over it; everything a manifest records.
struct RunSpec {
    ScenarioConfig config;
    SweepSpec sweep;
};

/// A config or manifest problem, reported with the file, line and/or field.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads either a key = value config with [sections] or a manifest.json
/// written by `fdxsim run` / `fdxsim figures`. Missing keys keep their defaults.
RunSpec load_run_spec(const std::string& path);

/// Applies one dotted-path setting such as "geometry.alpha" = "3.5".
void apply_setting(RunSpec& spec, const std::string& key, const std::string& value);

/// Applies "key=value" overrides in order.
void apply_overrides(RunSpec& spec, const std::vector<std::string>& overrides);

/// Seed precedence: config < FDXSIM_SEED < explicit flag.
void apply_seed_precedence(RunSpec& spec, std::optional<std::uint64_t> flag_seed);

/// Translates the sweep description into curves. Throws ParseError for bad values.
SweepPlan make_plan(const RunSpec& spec);

/// Fully resolved config as nested JSON, using the same keys the loader accepts.
nlohmann::json to_json(const RunSpec& spec);

std::string_view to_string(Vary vary);

}  // namespace fdxsim::cli
