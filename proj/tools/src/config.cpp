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

#include "config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "fdxsim/errors.hpp"
#include "fdxsim/relay_selection.hpp"

namespace fdxsim::cli {

namespace {

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream in(value);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double parse_double(const std::string& key, const std::string& raw) {
    const std::string v = trim(raw);
    if (v == "-inf" || v == "-infinity") return -std::numeric_limits<double>::infinity();
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty()) {
        throw ParseError("field '" + key + "': expected a number, got '" + raw + "'");
    }
    return out;
}

std::uint64_t parse_uint(const std::string& key, const std::string& raw) {
    const std::string v = trim(raw);
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty()) {
        throw ParseError("field '" + key + "': expected a non-negative integer, got '" + raw + "'");
    }
    return out;
}

bool parse_bool(const std::string& key, const std::string& raw) {
    const std::string v = trim(raw);
    if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "off" || v == "no") return false;
    throw ParseError("field '" + key + "': expected true/false, got '" + raw + "'");
}

Vary parse_vary(const std::string& raw) {
    const std::string v = trim(raw);
    if (v == "none") return Vary::None;
    if (v == "si") return Vary::Si;
    if (v == "scheme") return Vary::Scheme;
    if (v == "users") return Vary::Users;
    throw ParseError("field 'sweep.vary': expected none|si|scheme|users, got '" + raw + "'");
}

std::string json_scalar(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string out;
        for (const auto& item : v) {
            if (!out.empty()) out += ",";
            out += json_scalar(item);
        }
        return out;
    }
    return v.dump();
}

void apply_json(RunSpec& spec, const nlohmann::json& node, const std::string& prefix) {
    for (const auto& [key, value] : node.items()) {
        const std::string path = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            apply_json(spec, value, path);
        } else {
            apply_setting(spec, path, json_scalar(value));
        }
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json number_or_string(double v) {
    if (std::isfinite(v)) return v;
    return v < 0 ? "-inf" : "inf";
}

}  // namespace

std::string_view to_string(Vary vary) {
    switch (vary) {
    case Vary::None: return "none";
    case Vary::Si: return "si";
    case Vary::Scheme: return "scheme";
    case Vary::Users: return "users";
    }
    return "none";
}

void apply_setting(RunSpec& spec, const std::string& key, const std::string& value) {
    ScenarioConfig& c = spec.config;
    if (key == "k1") c.k1 = parse_uint(key, value);
    else if (key == "k2") c.k2 = parse_uint(key, value);
    else if (key == "n") c.n = parse_uint(key, value);
    else if (key == "w_hz") c.w_hz = parse_double(key, value);
    else if (key == "n0_dbm_hz") c.n0_dbm_hz = parse_double(key, value);
    else if (key == "pmax_user_dbm") c.pmax_user_dbm = parse_double(key, value);
    else if (key == "pmax_bs_dbm") c.pmax_bs_dbm = parse_double(key, value);
    else if (key == "geometry.r1") c.geometry.inner_radius = parse_double(key, value);
    else if (key == "geometry.r2") c.geometry.outer_radius = parse_double(key, value);
    else if (key == "geometry.alpha") c.geometry.path_loss_exponent = parse_double(key, value);
    else if (key == "si.enabled") c.si.enabled = parse_bool(key, value);
    else if (key == "si.residual_factor") c.si.residual_factor = parse_double(key, value);
    else if (key == "scheme") {
        try {
            c.scheme = parse_scheme(trim(value));
        } catch (const ConfigError& e) {
            throw ParseError("field 'scheme': " + std::string(e.what()));
        }
    }
    else if (key == "exclusive_relays") c.exclusive_relays = parse_bool(key, value);
    else if (key == "budgets.rmin_coop") c.rmin_coop = parse_double(key, value);
    else if (key == "budgets.rmin_nc") c.rmin_nc = parse_double(key, value);
    else if (key == "trials") c.trials = parse_uint(key, value);
    else if (key == "seed") c.seed = parse_uint(key, value);
    else if (key == "sweep.pmax_dbm") {
        spec.sweep.pmax_dbm.clear();
        for (const std::string& item : split_list(value)) spec.sweep.pmax_dbm.push_back(parse_double(key, item));
    }
    else if (key == "sweep.vary") spec.sweep.vary = parse_vary(value);
    else if (key == "sweep.values") spec.sweep.values = split_list(value);
    else throw ParseError("unknown field '" + key + "'");
}

void apply_overrides(RunSpec& spec, const std::vector<std::string>& overrides) {
    for (const std::string& item : overrides) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("override '" + item + "': expected key=value");
        apply_setting(spec, trim(item.substr(0, eq)), item.substr(eq + 1));
    }
}

void apply_seed_precedence(RunSpec& spec, std::optional<std::uint64_t> flag_seed) {
    if (const char* env = std::getenv("FDXSIM_SEED"); env != nullptr && *env != '\0') {
        spec.config.seed = parse_uint("FDXSIM_SEED", env);
    }
    if (flag_seed) spec.config.seed = *flag_seed;
}

RunSpec load_run_spec(const std::string& path) {
    RunSpec spec;
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(path + ": " + e.what());
        }
        if (!doc.contains("config") || !doc["config"].is_object()) {
            throw ParseError(path + ": manifest has no 'config' object");
        }
        try {
            apply_json(spec, doc["config"], "");
        } catch (const ParseError& e) {
            throw ParseError(path + ": " + e.what());
        }
        return spec;
    }

    boost::property_tree::ptree tree;
    std::istringstream in(text);
    try {
        boost::property_tree::ini_parser::read_ini(in, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw ParseError(path + ":" + std::to_string(e.line()) + ": " + e.message());
    }
    try {
        for (const auto& [key, node] : tree) {
            if (node.empty()) {
                apply_setting(spec, key, node.data());
                continue;
            }
            for (const auto& [sub, leaf] : node) apply_setting(spec, key + "." + sub, leaf.data());
        }
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
    return spec;
}

SweepPlan make_plan(const RunSpec& spec) {
    SweepPlan plan;
    plan.pmax_user_dbm = spec.sweep.pmax_dbm;
    if (plan.pmax_user_dbm.empty()) plan.pmax_user_dbm.push_back(spec.config.pmax_user_dbm);

    const auto& values = spec.sweep.values;
    if (spec.sweep.vary != Vary::None && values.empty()) {
        throw ParseError("field 'sweep.values': required when sweep.vary is " +
                         std::string(to_string(spec.sweep.vary)));
    }
    switch (spec.sweep.vary) {
    case Vary::None:
        plan.series.push_back({.label = "base", .scheme = {}, .si_enabled = {}, .k1 = {}, .k2 = {}});
        break;
    case Vary::Si:
        for (const std::string& v : values) {
            if (v != "on" && v != "off") throw ParseError("field 'sweep.values': si values are on/off, got '" + v + "'");
            plan.series.push_back({.label = "si_" + v, .scheme = {}, .si_enabled = v == "on", .k1 = {}, .k2 = {}});
        }
        break;
    case Vary::Scheme:
        for (const std::string& v : values) {
            try {
                plan.series.push_back({.label = v, .scheme = parse_scheme(v), .si_enabled = {}, .k1 = {}, .k2 = {}});
            } catch (const ConfigError& e) {
                throw ParseError("field 'sweep.values': " + std::string(e.what()));
            }
        }
        break;
    case Vary::Users:
        for (const std::string& v : values) {
            const auto x = v.find('x');
            if (x == std::string::npos) throw ParseError("field 'sweep.values': users are written K1xK2, got '" + v + "'");
            plan.series.push_back({.label = v,
                                   .scheme = {},
                                   .si_enabled = {},
                                   .k1 = parse_uint("sweep.values", v.substr(0, x)),
                                   .k2 = parse_uint("sweep.values", v.substr(x + 1))});
        }
        break;
    }
    return plan;
}

nlohmann::json to_json(const RunSpec& spec) {
    const ScenarioConfig& c = spec.config;
    nlohmann::json j;
    j["k1"] = c.k1;
    j["k2"] = c.k2;
    j["n"] = c.n;
    j["w_hz"] = c.w_hz;
    j["n0_dbm_hz"] = c.n0_dbm_hz;
    j["pmax_user_dbm"] = number_or_string(c.pmax_user_dbm);
    j["pmax_bs_dbm"] = number_or_string(c.pmax_bs_dbm);
    j["geometry"] = {{"r1", c.geometry.inner_radius},
                     {"r2", c.geometry.outer_radius},
                     {"alpha", c.geometry.path_loss_exponent}};
    j["si"] = {{"enabled", c.si.enabled}, {"residual_factor", c.si.residual_factor}};
    j["scheme"] = std::string(fdxsim::to_string(c.scheme));
    j["exclusive_relays"] = c.exclusive_relays;
    j["budgets"] = {{"rmin_coop", c.rmin_coop}, {"rmin_nc", c.rmin_nc}};
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    nlohmann::json grid = nlohmann::json::array();
    for (double p : spec.sweep.pmax_dbm) grid.push_back(number_or_string(p));
    j["sweep"] = {{"pmax_dbm", grid}, {"vary", std::string(to_string(spec.sweep.vary))}, {"values", spec.sweep.values}};
    return j;
}

}  // namespace fdxsim::cli
