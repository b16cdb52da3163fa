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

#include "fdxsim/oracles.hpp"
#include "fdxsim/units.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace fdxsim::oracle {

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const auto n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
    }
    return d;
}

double ks_critical_value_1pct(std::size_t n) {
    // sqrt(-ln(0.01 / 2) / 2)
    return 1.6276 / std::sqrt(static_cast<double>(n));
}

double assignment_total(std::span<const double> values, std::size_t n, std::span<const std::size_t> pair_of) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += values[i * n + pair_of[i]];
    return total;
}

double brute_force_max_assignment(std::span<const double> values, std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    double best = -std::numeric_limits<double>::infinity();
    do {
        best = std::max(best, assignment_total(values, n, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<double> central_difference_gradient(const std::function<double(std::span<const double>)>& f,
                                                std::span<const double> x, double rel_step, double floor) {
    std::vector<double> probe(x.begin(), x.end());
    std::vector<double> grad(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double h = rel_step * std::max(std::abs(x[i]), floor);
        probe[i] = x[i] + h;
        const double up = f(probe);
        probe[i] = x[i] - h;
        const double down = f(probe);
        probe[i] = x[i];
        grad[i] = (up - down) / (2.0 * h);
    }
    return grad;
}

std::array<std::array<double, 2>, 2> finite_difference_hessian(
    const std::function<double(double, double)>& f, double x, double y, double hx, double hy) {
    std::array<std::array<double, 2>, 2> h{};
    const double f0 = f(x, y);
    h[0][0] = (f(x + hx, y) - 2.0 * f0 + f(x - hx, y)) / (hx * hx);
    h[1][1] = (f(x, y + hy) - 2.0 * f0 + f(x, y - hy)) / (hy * hy);
    h[0][1] = h[1][0] =
        (f(x + hx, y + hy) - f(x + hx, y - hy) - f(x - hx, y + hy) + f(x - hx, y - hy)) / (4.0 * hx * hy);
    return h;
}

std::array<double, 2> symmetric_eigenvalues(const std::array<std::array<double, 2>, 2>& m) {
    Eigen::Matrix2d a;
    a << m[0][0], m[0][1], m[1][0], m[1][1];
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(a, Eigen::EigenvaluesOnly);
    return {solver.eigenvalues()[0], solver.eigenvalues()[1]};
}

double cartesian_distance(const PolarPoint& a, const PolarPoint& b) {
    const double dx = a.r * std::cos(a.theta) - b.r * std::cos(b.theta);
    const double dy = a.r * std::sin(a.theta) - b.r * std::sin(b.theta);
    return std::hypot(dx, dy);
}

double reference_first_hop(const Topology& topology, const ChannelRealization& ch, std::size_t k,
                           std::size_t m, std::size_t i) {
    const double d = cartesian_distance(topology.users[k], topology.relays[m]);
    const auto& h = ch.h[(k * ch.k2 + m) * ch.n + i];
    const double power = h.real() * h.real() + h.imag() * h.imag();
    return std::pow(d, -topology.geometry.path_loss_exponent) * power / ch.n0w;
}

double reference_second_hop(const Topology& topology, const ChannelRealization& ch, std::size_t m,
                            std::size_t j, int slot) {
    const auto& g = slot == 1 ? ch.g1[m * ch.n + j] : ch.g2[m * ch.n + j];
    const double power = g.real() * g.real() + g.imag() * g.imag();
    return std::pow(topology.relays[m].r, -topology.geometry.path_loss_exponent) * power / ch.n0w;
}

double reference_sum_rate(const Assignment& a, const PowerProfile& powers, const NormalizedGains& gains,
                          const BsPowerPolicy& bs, bool exact) {
    const std::size_t n = a.n;
    // Powers are stored per slot-1 subcarrier; look up the row owning column j.
    std::vector<std::size_t> row_of(n);
    for (std::size_t i = 0; i < n; ++i) row_of[a.pair_of[i]] = i;

    double total = 0.0;
    for (std::size_t m = 0; m < a.k2; ++m) {
        for (std::size_t k = 0; k < a.k1; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (a.rho(k, m, i, j) == 0) continue;
                    const double x = powers.slot1[i];
                    const double y = powers.slot2[i];
                    const double z = bs.p_b[j];
                    const double al = gains.first_hop[(k * a.k2 + m) * n + i];
                    const double be = gains.second_hop2[m * n + j];
                    const double ga = gains.self_interference[j];
                    double den = y * be + x * al + z * ga * x * al;
                    if (exact) den += 1.0 + z * ga;
                    const double sinr = den > 0.0 ? x * y * al * be / den : 0.0;
                    total += 0.5 * std::log1p(sinr) / std::log(2.0);
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (a.sigma1(m, i) == 0) continue;
            const double sinr = powers.slot1[i] * gains.second_hop1[m * n + i] /
                                (1.0 + bs.p_b[i] * gains.self_interference[i]);
            total += 0.5 * std::log1p(sinr) / std::log(2.0);
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (a.sigma2(m, j) == 0) continue;
            const double sinr = powers.slot2[row_of[j]] * gains.second_hop2[m * n + j] /
                                (1.0 + bs.p_b[j] * gains.self_interference[j]);
            total += 0.5 * std::log1p(sinr) / std::log(2.0);
        }
    }
    return total;
}

Instance make_instance(const ScenarioConfig& config, std::size_t trial_index) {
    config.validate();
    RngStream rng(config.seed, trial_index);
    Instance in;
    in.topology = sample_topology(rng, config.geometry, config.k1, config.k2);
    in.channel = make_realization(in.topology, config.n, config.si,
                                  noise_power_watts(config.n0_dbm_hz, config.w_hz), rng);
    in.gains = normalized_gains(in.channel, in.topology);
    in.bs = BsPowerPolicy::uniform(dbm_to_watts(config.pmax_bs_dbm), config.n);
    in.budgets = config.budgets();
    in.provisional = ProvisionalPowers::equal_split(in.budgets.pmax_coop, config.n);
    in.selection = select_all(config.scheme, in.topology, in.gains, in.provisional, in.bs,
                              config.exclusive_relays);
    const PairValueMatrix matrix =
        build_pair_matrix(in.selection, in.gains, in.provisional, in.bs, SinrMode::Exact);
    in.assignment = finalize_assignment(matrix, munkres_maximize(matrix.value, matrix.n));
    repair_qos(in.assignment, in.selection, in.gains, in.provisional, in.bs, SinrMode::Exact,
               in.budgets.rmin_coop > 0.0, in.budgets.rmin_nc > 0.0);
    return in;
}

}  // namespace fdxsim::oracle
