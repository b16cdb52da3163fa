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

#include "fdxsim/link_budget.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fdxsim/assignment.hpp"
#include "fdxsim/power_allocation.hpp"

namespace fdxsim {

BsPowerPolicy BsPowerPolicy::uniform(double total_watts, std::size_t n) {
    BsPowerPolicy policy;
    policy.p_b.assign(n, n == 0 ? 0.0 : total_watts / static_cast<double>(n));
    return policy;
}

std::string_view to_string(SinrMode mode) {
    return mode == SinrMode::Exact ? "exact" : "approximate";
}

NormalizedGains normalized_gains(const ChannelRealization& realization, const Topology& topology) {
    if (topology.num_far_users() != realization.k1 || topology.num_near_users() != realization.k2) {
        throw std::invalid_argument("normalized_gains: topology and realization disagree on sizes");
    }
    const double alpha = topology.geometry.path_loss_exponent;
    const double n0w = realization.n0w;
    NormalizedGains g;
    g.k1 = realization.k1;
    g.k2 = realization.k2;
    g.n = realization.n;
    g.first_hop.resize(g.k1 * g.k2 * g.n);
    g.second_hop1.resize(g.k2 * g.n);
    g.second_hop2.resize(g.k2 * g.n);
    g.self_interference.resize(g.n);

    for (std::size_t k = 0; k < g.k1; ++k) {
        for (std::size_t m = 0; m < g.k2; ++m) {
            const double loss = path_loss_between(topology.relays[m], topology.users[k], alpha);
            for (std::size_t i = 0; i < g.n; ++i) {
                g.first_hop[(k * g.k2 + m) * g.n + i] =
                    loss * std::norm(realization.user_to_relay(k, m, i)) / n0w;
            }
        }
    }
    for (std::size_t m = 0; m < g.k2; ++m) {
        const double loss = path_loss_to_bs(topology.relays[m], alpha);
        for (std::size_t i = 0; i < g.n; ++i) {
            g.second_hop1[m * g.n + i] = loss * std::norm(realization.relay_to_bs_slot1(m, i)) / n0w;
            g.second_hop2[m * g.n + i] = loss * std::norm(realization.relay_to_bs_slot2(m, i)) / n0w;
        }
    }
    for (std::size_t j = 0; j < g.n; ++j) {
        g.self_interference[j] = std::norm(realization.h_si[j]) / n0w;
    }
    return g;
}

double amplification_factor(double p_user, double gain_numerator, double n0w) {
    return 1.0 / std::sqrt(p_user * gain_numerator + n0w);
}

double sinr_cooperative(double user_power, double relay_power, double bs_power,
                        double first_hop, double second_hop, double si, SinrMode mode) {
    const double xa = user_power * first_hop;
    const double yb = relay_power * second_hop;
    const double interference = bs_power * si;
    double denominator = yb + xa + interference * xa;
    if (mode == SinrMode::Exact) denominator += 1.0 + interference;
    if (!(denominator > 0.0)) return 0.0;
    return xa * yb / denominator;
}

double sinr_noncooperative(double power, double gain, double bs_power, double si) {
    return power * gain / (1.0 + bs_power * si);
}

double rate_from_sinr(double sinr) { return 0.5 * std::log1p(sinr) / std::numbers::ln2; }

double link_rate(const Link& link, std::size_t i, std::size_t j, double first_power,
                 double second_power, const NormalizedGains& gains, const BsPowerPolicy& bs,
                 SinrMode mode) {
    if (link.mode == LinkMode::Cooperative) {
        const double sinr = sinr_cooperative(
            first_power, second_power, bs.p_b[j], gains.user_to_relay(link.far_user, link.near_user, i),
            gains.relay_to_bs_slot2(link.near_user, j), gains.si(j), mode);
        return rate_from_sinr(sinr);
    }
    const double r1 = rate_from_sinr(
        sinr_noncooperative(first_power, gains.relay_to_bs_slot1(link.near_user, i), bs.p_b[i], gains.si(i)));
    const double r2 = rate_from_sinr(
        sinr_noncooperative(second_power, gains.relay_to_bs_slot2(link.near_user, j), bs.p_b[j], gains.si(j)));
    return r1 + r2;
}

namespace {

void check_dimensions(const Assignment& assignment, const PowerProfile& powers,
                      const NormalizedGains& gains, const BsPowerPolicy& bs) {
    const std::size_t n = assignment.n;
    if (assignment.pair_of.size() != n || assignment.links.size() != n || powers.slot1.size() != n ||
        powers.slot2.size() != n || gains.n != n || bs.p_b.size() != n || gains.k1 != assignment.k1 ||
        gains.k2 != assignment.k2) {
        throw std::invalid_argument("sum-rate: inconsistent dimensions");
    }
}

}  // namespace

double total_sum_rate(const Assignment& assignment, const PowerProfile& powers,
                      const NormalizedGains& gains, const BsPowerPolicy& bs, SinrMode mode) {
    check_dimensions(assignment, powers, gains, bs);
    double total = 0.0;
    for (std::size_t i = 0; i < assignment.n; ++i) {
        total += link_rate(assignment.links[i], i, assignment.pair_of[i], powers.slot1[i],
                           powers.slot2[i], gains, bs, mode);
    }
    return total;
}

std::vector<double> per_user_rates(const Assignment& assignment, const PowerProfile& powers,
                                   const NormalizedGains& gains, const BsPowerPolicy& bs,
                                   SinrMode mode) {
    check_dimensions(assignment, powers, gains, bs);
    std::vector<double> rates(assignment.k1 + assignment.k2, 0.0);
    for (std::size_t i = 0; i < assignment.n; ++i) {
        const Link& link = assignment.links[i];
        const double r = link_rate(link, i, assignment.pair_of[i], powers.slot1[i], powers.slot2[i],
                                   gains, bs, mode);
        if (link.mode == LinkMode::Cooperative) {
            rates[link.far_user] += r;
        } else {
            rates[assignment.k1 + link.near_user] += r;
        }
    }
    return rates;
}

}  // namespace fdxsim
