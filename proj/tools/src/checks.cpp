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

#include "checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "fdxsim/fdxsim.hpp"
#include "fdxsim/oracles.hpp"

namespace fdxsim::checks {

namespace {

using Clock = std::chrono::steady_clock;

SuiteResult finish(std::string name, bool passed, const std::ostringstream& detail, Clock::time_point start) {
    return {std::move(name), passed, detail.str(),
            std::chrono::duration<double>(Clock::now() - start).count()};
}

constexpr double kFdStep = 1e-3;

double log_uniform(RngStream& rng, double lo, double hi) {
    return std::exp(rng.uniform(std::log(lo), std::log(hi)));
}

double max_abs(const Matrix2& m) {
    return std::max({std::abs(m[0][0]), std::abs(m[0][1]), std::abs(m[1][0]), std::abs(m[1][1])});
}

}  // namespace

SuiteResult munkres_suite(std::size_t matrices, std::uint64_t seed) {
    const auto start = Clock::now();
    constexpr std::size_t n = 6;
    RngStream rng(seed);
    std::size_t mismatches = 0;
    double worst = 0.0;
    std::vector<double> values(n * n);
    for (std::size_t t = 0; t < matrices; ++t) {
        for (double& v : values) v = rng.uniform(0.0, 10.0);
        const auto pairing = munkres_maximize(values, n);
        const double got = oracle::assignment_total(values, n, pairing);
        const double best = oracle::brute_force_max_assignment(values, n);
        if (got != best) {
            ++mismatches;
            worst = std::max(worst, std::abs(best - got));
        }
    }
    std::ostringstream detail;
    detail << matrices << " matrices, " << mismatches << " mismatches";
    if (mismatches) detail << ", worst gap " << worst;
    return finish("munkres", mismatches == 0, detail, start);
}

SuiteResult hessian_suite(std::size_t points, std::uint64_t seed) {
    const auto start = Clock::now();
    RngStream rng(seed);
    double worst_fd = 0.0;
    double worst_eig = 0.0;
    double max_eig = -std::numeric_limits<double>::infinity();
    double worst_nc_fd = 0.0;
    double worst_nc_eig = 0.0;
    double max_nc_eig = -std::numeric_limits<double>::infinity();

    for (std::size_t p = 0; p < points; ++p) {
        const double x = log_uniform(rng, 0.1, 10.0);
        const double y = log_uniform(rng, 0.1, 10.0);
        const double a = log_uniform(rng, 0.1, 10.0);
        const double b = log_uniform(rng, 0.1, 10.0);
        const double c = log_uniform(rng, 0.1, 10.0);

        const Matrix2 h = coop_hessian_closed_form(x, y, a, b, c);
        // The constant 1 has no curvature; leaving it out keeps the differences clean.
        const auto f = [a, b, c](double u, double v) { return a * b * u * v / (a * c * u + b * v); };
        const Matrix2 fd = oracle::finite_difference_hessian(f, x, y, kFdStep * x, kFdStep * y);
        const double scale = max_abs(h);
        for (int r = 0; r < 2; ++r) {
            for (int s = 0; s < 2; ++s) worst_fd = std::max(worst_fd, std::abs(h[r][s] - fd[r][s]) / scale);
        }
        const auto closed = coop_hessian_eigenvalues(x, y, a, b, c);
        const auto numeric = oracle::symmetric_eigenvalues(h);
        const auto sorted = std::array<double, 2>{std::min(closed[0], closed[1]), std::max(closed[0], closed[1])};
        const double eig_scale = std::max(std::abs(sorted[0]), std::abs(sorted[1]));
        for (int r = 0; r < 2; ++r) {
            worst_eig = std::max(worst_eig, std::abs(sorted[r] - numeric[r]) / eig_scale);
            max_eig = std::max({max_eig, closed[r], numeric[r]});
        }

        const double z = log_uniform(rng, 0.1, 10.0);
        const NcCurvature nc = nc_hessian_and_eigenvalues(x, b, c, z);
        const auto g = [b, c, z](double u, double) { return std::log1p(b * u / (c * z + 1.0)) / std::numbers::ln2; };
        const double nc_fd = oracle::finite_difference_hessian(g, x, 0.0, kFdStep * x, 1.0)[0][0];
        worst_nc_fd = std::max(worst_nc_fd, std::abs(nc.hessian - nc_fd) / std::abs(nc.hessian));
        const Matrix2 nc_matrix{{{nc.hessian, 0.0}, {0.0, 0.0}}};
        const auto nc_numeric = oracle::symmetric_eigenvalues(nc_matrix);
        const auto nc_sorted = std::array<double, 2>{std::min(nc.eigenvalues[0], nc.eigenvalues[1]),
                                                     std::max(nc.eigenvalues[0], nc.eigenvalues[1])};
        const double nc_scale = std::abs(nc_sorted[0]);
        for (int r = 0; r < 2; ++r) {
            worst_nc_eig = std::max(worst_nc_eig, std::abs(nc_sorted[r] - nc_numeric[r]) / nc_scale);
            max_nc_eig = std::max({max_nc_eig, nc.eigenvalues[r], nc_numeric[r]});
        }
    }
    const bool ok = worst_fd <= kHessianRelTolerance && worst_eig <= kEigenTolerance && max_eig <= kEigenCeiling &&
                    worst_nc_fd <= kHessianRelTolerance && worst_nc_eig <= kEigenTolerance &&
                    max_nc_eig <= kEigenCeiling;
    std::ostringstream detail;
    detail << points << " points; coop fd " << worst_fd << ", eig " << worst_eig << ", max eig " << max_eig
           << "; direct fd " << worst_nc_fd << ", eig " << worst_nc_eig << ", max eig " << max_nc_eig;
    return finish("hessian", ok, detail, start);
}

SuiteResult gradient_suite(std::size_t instances, std::uint64_t seed, const ObjectiveFn& objective) {
    const auto start = Clock::now();
    const ObjectiveFn eval = objective ? objective
                                       : ObjectiveFn([](const PowerProfile& p, const Assignment& a,
                                                        const NormalizedGains& g, const BsPowerPolicy& bs,
                                                        SinrMode mode) {
                                             return objective_and_gradient(p, a, g, bs, mode);
                                         });
    RngStream rng(seed);
    double worst = 0.0;
    for (std::size_t t = 0; t < instances; ++t) {
        ScenarioConfig config;
        config.seed = seed;
        config.si.enabled = t % 2 == 1;
        const SinrMode mode = (t / 2) % 2 == 0 ? SinrMode::Approximate : SinrMode::Exact;
        const oracle::Instance in = oracle::make_instance(config, t);
        const std::size_t n = in.assignment.n;

        std::vector<double> x(2 * n);
        for (double& v : x) v = rng.uniform(0.1, 1.0) * in.budgets.pmax_coop / static_cast<double>(n);
        const auto unpack = [n](std::span<const double> v) {
            return PowerProfile{{v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)},
                                {v.begin() + static_cast<std::ptrdiff_t>(n), v.end()}};
        };
        const ObjectiveValue analytic = eval(unpack(x), in.assignment, in.gains, in.bs, mode);
        const auto f = [&](std::span<const double> v) {
            return eval(unpack(v), in.assignment, in.gains, in.bs, mode).value;
        };
        const std::vector<double> numeric = oracle::central_difference_gradient(f, x, 1e-5, 0.0);
        double norm = 0.0;
        for (double v : numeric) norm = std::max(norm, std::abs(v));
        for (std::size_t i = 0; i < x.size(); ++i) {
            // Components far below the largest one are compared on its scale.
            const double denom = std::max(std::abs(numeric[i]), 1e-3 * norm);
            worst = std::max(worst, std::abs(analytic.gradient[i] - numeric[i]) / denom);
        }
    }
    std::ostringstream detail;
    detail << instances << " instances, max relative error " << worst;
    return finish("gradient", worst <= kGradientTolerance, detail, start);
}

SuiteResult distribution_suite(std::size_t samples, std::uint64_t seed) {
    const auto start = Clock::now();
    const CellGeometry geometry;
    const double r1 = geometry.inner_radius;
    const double r2 = geometry.outer_radius;
    const double critical = oracle::ks_critical_value_1pct(samples);
    std::ostringstream detail;
    bool ok = true;
    const auto record = [&](const char* what, double stat, bool pass) {
        detail << what << ' ' << stat << (pass ? "" : " (FAIL)") << "; ";
        ok = ok && pass;
    };

    RngStream rng(seed);
    std::vector<double> relay_r(samples), user_r(samples), theta(samples);
    double relay_sum = 0.0;
    double user_sum = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        const PolarPoint relay = sample_relay_position(rng, geometry);
        const PolarPoint user = sample_user_position(rng, geometry);
        relay_r[s] = relay.r;
        user_r[s] = user.r;
        theta[s] = relay.theta;
        relay_sum += relay.r;
        user_sum += user.r;
    }
    const auto count = static_cast<double>(samples);
    const double relay_mean = relay_sum / count;
    const double user_mean = user_sum / count;
    record("relay mean r", relay_mean, std::abs(relay_mean - r1 / 2.0) <= 0.01 * r1 / 2.0);
    record("user mean r", user_mean, std::abs(user_mean - (r1 + r2) / 2.0) <= 0.01 * (r1 + r2) / 2.0);
    const double ks_relay = oracle::ks_statistic(std::move(relay_r), [r1](double r) { return std::clamp(r / r1, 0.0, 1.0); });
    const double ks_user = oracle::ks_statistic(
        std::move(user_r), [r1, r2](double r) { return std::clamp((r - r1) / (r2 - r1), 0.0, 1.0); });
    const double ks_theta = oracle::ks_statistic(
        std::move(theta), [](double t) { return std::clamp(t / (2.0 * std::numbers::pi), 0.0, 1.0); });
    record("KS relay r", ks_relay, ks_relay < critical);
    record("KS user r", ks_user, ks_user < critical);
    record("KS theta", ks_theta, ks_theta < critical);

    std::vector<double> power(samples);
    double re_sum = 0.0;
    double im_sum = 0.0;
    double power_sum = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        const Complex h = draw_complex_gaussian(rng);
        re_sum += h.real();
        im_sum += h.imag();
        power[s] = std::norm(h);
        power_sum += power[s];
    }
    const double mean_power = power_sum / count;
    record("E|h|^2", mean_power, std::abs(mean_power - 1.0) <= 0.01);
    record("E Re h", re_sum / count, std::abs(re_sum / count) <= 3e-3);
    record("E Im h", im_sum / count, std::abs(im_sum / count) <= 3e-3);
    const double ks_exp = oracle::ks_statistic(std::move(power), [](double v) { return v <= 0.0 ? 0.0 : 1.0 - std::exp(-v); });
    record("KS |h|^2", ks_exp, ks_exp < critical);

    // Slot independence and SI scaling from full realizations.
    Topology topology;
    topology.geometry = geometry;
    topology.relays = {{50.0, 0.0}};
    topology.users = {{200.0, 0.0}};
    const std::size_t n = 16;
    const std::size_t realizations = (samples + n - 1) / n;
    const SiConfig si{.enabled = true, .residual_factor = 0.01};
    double sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0, si_sum = 0.0;
    std::size_t pairs = 0;
    std::size_t si_count = 0;
    for (std::size_t t = 0; t < realizations; ++t) {
        const ChannelRealization ch = make_realization(topology, n, si, 1.0, rng);
        for (std::size_t i = 0; i < n; ++i) {
            const double u = std::norm(ch.g1[i]);
            const double v = std::norm(ch.g2[i]);
            sx += u;
            sy += v;
            sxx += u * u;
            syy += v * v;
            sxy += u * v;
            ++pairs;
        }
        if (si_count < 100000) {
            for (const Complex& c : ch.h_si) si_sum += std::norm(c);
            si_count += n;
        }
    }
    const auto np = static_cast<double>(pairs);
    const double cov = sxy / np - (sx / np) * (sy / np);
    const double corr = cov / std::sqrt((sxx / np - (sx / np) * (sx / np)) * (syy / np - (sy / np) * (sy / np)));
    record("corr |g1|^2 |g2|^2", corr, std::abs(corr) < 0.01);
    const double si_mean = si_sum / static_cast<double>(si_count);
    record("E|h_si|^2 at 0.01", si_mean, std::abs(si_mean - 0.01) <= 0.03 * 0.01);

    detail << samples << " samples, KS critical " << critical;
    return finish("distributions", ok, detail, start);
}

}  // namespace fdxsim::checks
