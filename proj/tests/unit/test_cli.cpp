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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "config.hpp"

namespace fdxsim::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("fdxsim_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        unsetenv("FDXSIM_SEED");
    }
    void TearDown() override {
        fs::remove_all(dir_);
        unsetenv("FDXSIM_SEED");
    }

    fs::path write(const std::string& name, const std::string& text) const {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p;
    }

    static std::string read(const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    fs::path dir_;
};

const char* kSmallConfig = R"(trials = 8
seed = 42
[sweep]
pmax_dbm = 0, 10
)";

TEST_F(CliTest, RunWritesHeaderAndManifest) {
    const fs::path cfg = write("small.ini", kSmallConfig);
    std::ostringstream out, err;
    RunOptions o{.config_path = cfg.string(), .overrides = {}, .seed = {}, .threads = 1, .out_dir = dir_ / "out"};
    ASSERT_EQ(cmd_run(o, out, err), kExitOk) << err.str();
    const std::string csv = read(dir_ / "out" / "sweep.csv");
    EXPECT_EQ(csv.substr(0, csv.find('\n')), kCsvHeader);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
    const auto manifest = nlohmann::json::parse(read(dir_ / "out" / "manifest.json"));
    EXPECT_EQ(manifest["config"]["seed"], 42);
    EXPECT_EQ(manifest["config"]["trials"], 8);
    EXPECT_EQ(manifest["version"], kVersion);
    EXPECT_TRUE(manifest.contains("timestamp"));
    EXPECT_EQ(manifest["outputs"]["csv"], (dir_ / "out" / "sweep.csv").string());
    EXPECT_EQ(manifest["results"].size(), 2u);
}

TEST_F(CliTest, MissingFileIsUsageError) {
    std::ostringstream out, err;
    RunOptions o{.config_path = (dir_ / "absent.ini").string(), .overrides = {}, .seed = {}, .threads = 1,
                 .out_dir = dir_};
    EXPECT_EQ(cmd_run(o, out, err), kExitUsage);
    EXPECT_NE(err.str().find("absent.ini"), std::string::npos);
}

TEST_F(CliTest, ParseErrorsNameLineOrField) {
    std::ostringstream out, err;
    RunOptions o{.config_path = write("bad.ini", "k1 = 4\n[geometry\n").string(), .overrides = {}, .seed = {},
                 .threads = 1, .out_dir = dir_};
    EXPECT_EQ(cmd_run(o, out, err), kExitUsage);
    EXPECT_NE(err.str().find("bad.ini:2"), std::string::npos) << err.str();

    std::ostringstream err2;
    o.config_path = write("field.ini", "[geometry]\nalpha = steep\n").string();
    EXPECT_EQ(cmd_run(o, out, err2), kExitUsage);
    EXPECT_NE(err2.str().find("geometry.alpha"), std::string::npos) << err2.str();

    std::ostringstream err3;
    o.config_path = write("range.ini", kSmallConfig).string();
    o.overrides = {"geometry.alpha=9"};
    EXPECT_EQ(cmd_run(o, out, err3), kExitUsage);
    EXPECT_NE(err3.str().find("alpha"), std::string::npos) << err3.str();

    std::ostringstream err4;
    o.overrides = {"no_such_key=1"};
    EXPECT_EQ(cmd_run(o, out, err4), kExitUsage);
    EXPECT_NE(err4.str().find("no_such_key"), std::string::npos);
}

TEST_F(CliTest, InfeasibleScenarioExitsThree) {
    std::ostringstream out, err;
    RunOptions o{.config_path = write("c.ini", kSmallConfig).string(), .overrides = {"sweep.pmax_dbm=-inf"},
                 .seed = {}, .threads = 1, .out_dir = dir_};
    EXPECT_EQ(cmd_run(o, out, err), kExitInfeasible);
}

TEST_F(CliTest, OverrideIsReflectedInManifest) {
    std::ostringstream out, err;
    RunOptions o{.config_path = write("c.ini", "trials = 4\n").string(), .overrides = {"pmax_user_dbm=10"},
                 .seed = {}, .threads = 1, .out_dir = dir_ / "o"};
    ASSERT_EQ(cmd_run(o, out, err), kExitOk) << err.str();
    const RunSpec back = load_run_spec((dir_ / "o" / "manifest.json").string());
    EXPECT_EQ(back.config.pmax_user_dbm, 10.0);
    const std::string csv = read(dir_ / "o" / "sweep.csv");
    EXPECT_NE(csv.find("\n10,base,"), std::string::npos);
}

TEST_F(CliTest, ManifestRerunReproducesCsvBitForBit) {
    std::ostringstream out, err;
    RunOptions o{.config_path = write("c.ini", kSmallConfig).string(),
                 .overrides = {"si.enabled=true", "sweep.vary=scheme",
                               "sweep.values=shortest-total-distance,harmonic-mean"},
                 .seed = 99, .threads = 2, .out_dir = dir_ / "a"};
    ASSERT_EQ(cmd_run(o, out, err), kExitOk) << err.str();
    RunOptions again{.config_path = (dir_ / "a" / "manifest.json").string(), .overrides = {}, .seed = {},
                     .threads = 1, .out_dir = dir_ / "b"};
    ASSERT_EQ(cmd_run(again, out, err), kExitOk) << err.str();
    EXPECT_EQ(read(dir_ / "a" / "sweep.csv"), read(dir_ / "b" / "sweep.csv"));
}

TEST_F(CliTest, SeedPrecedence) {
    RunSpec spec;
    apply_setting(spec, "seed", "1");
    apply_seed_precedence(spec, std::nullopt);
    EXPECT_EQ(spec.config.seed, 1u);
    setenv("FDXSIM_SEED", "2", 1);
    apply_seed_precedence(spec, std::nullopt);
    EXPECT_EQ(spec.config.seed, 2u);
    apply_seed_precedence(spec, 3u);
    EXPECT_EQ(spec.config.seed, 3u);
}

TEST_F(CliTest, IniSectionsMapToFields) {
    const fs::path cfg = write("full.ini", R"(k1 = 2
k2 = 3
n = 6
pmax_user_dbm = 15
scheme = least-longest-hop
exclusive_relays = false
[geometry]
r1 = 50
r2 = 150
alpha = 3.5
[si]
enabled = on
residual_factor = 0.25
[budgets]
rmin_coop = 0.2
rmin_nc = 0
[sweep]
vary = users
values = 2x2, 4x4
)");
    const RunSpec s = load_run_spec(cfg.string());
    EXPECT_EQ(s.config.k1, 2u);
    EXPECT_EQ(s.config.k2, 3u);
    EXPECT_EQ(s.config.n, 6u);
    EXPECT_EQ(s.config.scheme, SelectionScheme::LeastLongestHop);
    EXPECT_FALSE(s.config.exclusive_relays);
    EXPECT_EQ(s.config.geometry.inner_radius, 50.0);
    EXPECT_EQ(s.config.geometry.outer_radius, 150.0);
    EXPECT_EQ(s.config.geometry.path_loss_exponent, 3.5);
    EXPECT_TRUE(s.config.si.enabled);
    EXPECT_EQ(s.config.si.residual_factor, 0.25);
    EXPECT_EQ(s.config.rmin_coop, 0.2);
    EXPECT_EQ(s.config.rmin_nc, 0.0);
    const SweepPlan plan = make_plan(s);
    ASSERT_EQ(plan.series.size(), 2u);
    EXPECT_EQ(plan.series[1].label, "4x4");
    EXPECT_EQ(plan.series[1].k1, 4u);
    EXPECT_EQ(plan.pmax_user_dbm, std::vector<double>{15.0});
}

TEST_F(CliTest, FigurePresets) {
    const RunSpec fig2 = figure_preset("fig2");
    EXPECT_TRUE(fig2.config.si.enabled);
    EXPECT_EQ(fig2.sweep.values, (std::vector<std::string>{"2x2", "4x4", "8x8"}));
    EXPECT_EQ(fig2.sweep.pmax_dbm, (std::vector<double>{0, 5, 10, 15, 20}));
    EXPECT_EQ(figure_preset("fig7").config.scheme, SelectionScheme::ShortestTotalDistance);
    EXPECT_FALSE(figure_preset("fig7").config.si.enabled);
    EXPECT_EQ(make_plan(figure_preset("fig5")).series.size(), 7u);
    EXPECT_TRUE(figure_preset("fig5").config.si.enabled);
    EXPECT_FALSE(figure_preset("fig6").config.si.enabled);
    EXPECT_THROW(figure_preset("fig8"), ParseError);
}

TEST_F(CliTest, FiguresFig4AndFig5Shapes) {
    std::ostringstream out, err;
    FigureOptions o{.out_dir = dir_, .threads = 2, .trials = 5, .seed = {}};
    ASSERT_EQ(cmd_figures({"fig4", "fig5"}, o, out, err), kExitOk) << err.str();
    const std::string fig4 = read(dir_ / "fig4.csv");
    EXPECT_EQ(std::count(fig4.begin(), fig4.end(), '\n'), 1 + 5 * 2);
    EXPECT_NE(fig4.find(",si_on,"), std::string::npos);
    EXPECT_NE(fig4.find(",si_off,"), std::string::npos);
    const std::string fig5 = read(dir_ / "fig5.csv");
    EXPECT_EQ(std::count(fig5.begin(), fig5.end(), '\n'), 1 + 5 * 7);
    const auto manifest = nlohmann::json::parse(read(dir_ / "fig5_manifest.json"));
    EXPECT_EQ(manifest["config"]["sweep"]["vary"], "scheme");
    EXPECT_EQ(manifest["config"]["trials"], 5);
}

TEST_F(CliTest, UnknownFigureIsUsageError) {
    std::ostringstream out, err;
    EXPECT_EQ(cmd_figures({"fig1"}, FigureOptions{.out_dir = dir_}, out, err), kExitUsage);
}

SelftestOptions quick_selftest() {
    return {.munkres_matrices = 100, .hessian_points = 500, .gradient_instances = 10,
            .distribution_samples = 100000, .seed = 7, .objective = {}};
}

TEST_F(CliTest, SelftestPassesOnFreshBuild) {
    std::ostringstream out;
    EXPECT_EQ(cmd_selftest(quick_selftest(), out), kExitOk) << out.str();
    EXPECT_NE(out.str().find("PASS munkres"), std::string::npos);
    EXPECT_NE(out.str().find("PASS distributions"), std::string::npos);
}

TEST_F(CliTest, SelftestCatchesGradientSignError) {
    SelftestOptions o = quick_selftest();
    o.objective = [](const PowerProfile& p, const Assignment& a, const NormalizedGains& g, const BsPowerPolicy& bs,
                     SinrMode mode) {
        ObjectiveValue v = objective_and_gradient(p, a, g, bs, mode);
        v.gradient[0] = -v.gradient[0];
        return v;
    };
    std::ostringstream out;
    EXPECT_EQ(cmd_selftest(o, out), kExitSelftestFailed);
    EXPECT_NE(out.str().find("FAIL gradient"), std::string::npos) << out.str();
}

}  // namespace
}  // namespace fdxsim::cli
