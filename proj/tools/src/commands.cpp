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

#include "commands.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

#include "fdxsim/errors.hpp"
#include "fdxsim/units.hpp"

namespace fdxsim::cli {

namespace {

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

/// Field-level checks of every curve before any trial runs.
void preflight(const RunSpec& spec, const SweepPlan& plan) {
    for (const SeriesSpec& series : plan.series) {
        for (double p : plan.pmax_user_dbm) {
            ScenarioConfig config = series.apply(spec.config);
            config.pmax_user_dbm = p;
            config.validate();
            const Budgets b = config.budgets();
            if (b.pmax_coop <= 0.0 && (b.rmin_coop > 0.0 || b.rmin_nc > 0.0)) {
                throw InfeasibleError("series '" + series.label + "' at pmax_user_dbm=" + format_double(p) +
                                      ": zero user power cannot meet a positive minimum rate");
            }
        }
    }
}

nlohmann::json manifest_json(const RunSpec& spec, const SweepResult& result, const std::string& command,
                             const std::filesystem::path& csv, const std::filesystem::path& manifest,
                             unsigned threads) {
    nlohmann::json j;
    j["tool"] = "fdxsim";
    j["version"] = kVersion;
    j["timestamp"] = utc_timestamp();
    j["command"] = command;
    j["threads"] = threads;
    j["outputs"] = {{"csv", csv.string()}, {"manifest", manifest.string()}};
    j["units"] = {{"sum_rate", "bit/s/Hz"},
                  {"bit_per_s_factor", spec.config.w_hz},
                  {"note", "multiply a sum-rate by w_hz for bit/s"}};
    j["config"] = to_json(spec);
    nlohmann::json points = nlohmann::json::array();
    for (const SweepPoint& p : result.points) {
        points.push_back({{"axis", p.axis},
                          {"series", p.series},
                          {"mean_sumrate_bps_hz", p.mean_sum_rate},
                          {"mean_sumrate_bps", p.mean_sum_rate * spec.config.w_hz},
                          {"stderr", p.stderr_sum_rate},
                          {"trials", p.trials},
                          {"failed_trials", p.failed_trials},
                          {"qos_relaxed_trials", p.qos_relaxed_trials}});
    }
    j["results"] = points;
    return j;
}

/// Runs one spec and writes its CSV and manifest. Returns an exit code.
int execute(const RunSpec& spec, const std::string& command, const std::filesystem::path& csv,
            const std::filesystem::path& manifest, unsigned threads, std::ostream& out, std::ostream& err) {
    SweepPlan plan;
    try {
        plan = make_plan(spec);
        preflight(spec, plan);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const SweepResult result = run_sweep(spec.config, plan, threads);
    try {
        std::filesystem::create_directories(csv.parent_path().empty() ? "." : csv.parent_path());
        write_text(csv, format_csv(result));
        write_text(manifest, manifest_json(spec, result, command, csv, manifest, threads).dump(2) + "\n");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    out << "wrote " << csv.string() << " and " << manifest.string() << '\n';

    for (const SweepPoint& p : result.points) {
        if (p.trials == 0) {
            err << "infeasible: every trial failed for series '" << p.series << "' at axis " << format_double(p.axis)
                << '\n';
            return kExitInfeasible;
        }
    }
    return kExitOk;
}

}  // namespace

RunSpec figure_preset(const std::string& name) {
    RunSpec spec;
    spec.config.trials = 500;
    spec.sweep.pmax_dbm = {0.0, 5.0, 10.0, 15.0, 20.0};
    const std::vector<std::string> users = {"2x2", "4x4", "8x8"};
    std::vector<std::string> schemes;
    for (SelectionScheme s : kAllSchemes) schemes.emplace_back(to_string(s));

    if (name == "fig2") {
        spec.config.si.enabled = true;
        spec.config.scheme = SelectionScheme::BestSinrWithSi;
        spec.sweep.vary = Vary::Users;
        spec.sweep.values = users;
    } else if (name == "fig3") {
        spec.config.si.enabled = false;
        spec.config.scheme = SelectionScheme::BestSinrNoSi;
        spec.sweep.vary = Vary::Users;
        spec.sweep.values = users;
    } else if (name == "fig4") {
        spec.config.scheme = SelectionScheme::BestSinrWithSi;
        spec.sweep.vary = Vary::Si;
        spec.sweep.values = {"on", "off"};
    } else if (name == "fig5" || name == "fig6") {
        spec.config.si.enabled = name == "fig5";
        spec.sweep.vary = Vary::Scheme;
        spec.sweep.values = schemes;
    } else if (name == "fig7") {
        spec.config.si.enabled = false;
        spec.config.scheme = SelectionScheme::ShortestTotalDistance;
        spec.sweep.vary = Vary::Users;
        spec.sweep.values = users;
    } else {
        throw ParseError("unknown figure '" + name + "' (expected fig2..fig7 or all)");
    }
    return spec;
}

std::string format_csv(const SweepResult& result) {
    std::string csv = std::string(kCsvHeader) + "\n";
    for (const SweepPoint& p : result.points) {
        csv += format_double(p.axis) + "," + p.series + "," + format_double(p.mean_sum_rate) + "," +
               format_double(p.stderr_sum_rate) + "," + std::to_string(p.trials) + "," +
               std::to_string(p.failed_trials) + "\n";
    }
    return csv;
}

int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err) {
    RunSpec spec;
    try {
        spec = load_run_spec(options.config_path);
        apply_overrides(spec, options.overrides);
        apply_seed_precedence(spec, options.seed);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    std::string command = "run --config " + options.config_path;
    for (const std::string& o : options.overrides) command += " --set " + o;
    return execute(spec, command, options.out_dir / "sweep.csv", options.out_dir / "manifest.json",
                   options.threads, out, err);
}

int cmd_figures(const std::vector<std::string>& which, const FigureOptions& options, std::ostream& out,
                std::ostream& err) {
    std::vector<std::string> names;
    for (const std::string& w : which) {
        if (w == "all") {
            names.insert(names.end(), kFigureNames.begin(), kFigureNames.end());
        } else {
            names.push_back(w);
        }
    }
    if (names.empty()) {
        err << "error: name at least one figure (fig2..fig7 or all)\n";
        return kExitUsage;
    }
    std::vector<RunSpec> specs;
    try {
        for (const std::string& name : names) {
            RunSpec spec = figure_preset(name);
            if (options.trials) spec.config.trials = *options.trials;
            apply_seed_precedence(spec, options.seed);
            specs.push_back(std::move(spec));
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    for (std::size_t f = 0; f < names.size(); ++f) {
        const int code = execute(specs[f], "figures " + names[f], options.out_dir / (names[f] + ".csv"),
                                 options.out_dir / (names[f] + "_manifest.json"), options.threads, out, err);
        if (code != kExitOk) return code;
    }
    return kExitOk;
}

int cmd_selftest(const SelftestOptions& options, std::ostream& out) {
    const std::vector<checks::SuiteResult> results = {
        checks::munkres_suite(options.munkres_matrices, options.seed),
        checks::gradient_suite(options.gradient_instances, options.seed, options.objective),
        checks::hessian_suite(options.hessian_points, options.seed),
        checks::distribution_suite(options.distribution_samples, options.seed),
    };
    bool all = true;
    for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << format_double(std::round(r.seconds * 100) / 100)
            << " s): " << r.detail << '\n';
        all = all && r.passed;
    }
    return all ? kExitOk : kExitSelftestFailed;
}

}  // namespace fdxsim::cli
