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

#include <cstddef>
#include <limits>
#include <string_view>
#include <vector>

#include "fdxsim/channel.hpp"
#include "fdxsim/geometry.hpp"

namespace fdxsim {

struct Assignment;
struct PowerProfile;

/// Channel power gains divided by the per-subcarrier noise power N0*W.
struct NormalizedGains {
    std::size_t k1 = 0;
    std::size_t k2 = 0;
    std::size_t n = 0;

    std::vector<double> first_hop;   // (k, m, i): l(x_r, x_u) |h|^2 / N0W
    std::vector<double> second_hop1; // (m, i):    l(x_r) |g1|^2 / N0W
    std::vector<double> second_hop2; // (m, j):    l(x_r) |g2|^2 / N0W
    std::vector<double> self_interference;  // (j): |H_SI|^2 / N0W

    double user_to_relay(std::size_t k, std::size_t m, std::size_t i) const {
        return first_hop[(k * k2 + m) * n + i];
    }
    double relay_to_bs_slot1(std::size_t m, std::size_t i) const { return second_hop1[m * n + i]; }
    double relay_to_bs_slot2(std::size_t m, std::size_t j) const { return second_hop2[m * n + j]; }
    double si(std::size_t j) const { return self_interference[j]; }
};

/// Fixed BS downlink power per subcarrier (watts), identical in both slots.
/// It enters the uplink only as self-interference.
struct BsPowerPolicy {
    std::vector<double> p_b;

    /// Splits a total budget evenly over n subcarriers.
    static BsPowerPolicy uniform(double total_watts, std::size_t n);
};

/// Exact keeps every denominator term of the cooperative SINR. Approximate drops
/// the constant 1 and the standalone BS-interference term, which makes the
/// cooperative rate jointly concave in the two hop powers.
enum class SinrMode { Exact, Approximate };

std::string_view to_string(SinrMode mode);

enum class LinkMode { Cooperative, NonCooperative };

/// One transmission occupying a subcarrier pair (i, j).
/// Cooperative: far_user -> near_user (relay) on i, relay -> BS on j.
/// NonCooperative: near_user -> BS on i in slot 1 and on j in slot 2.
struct Link {
    LinkMode mode = LinkMode::NonCooperative;
    std::size_t far_user = std::numeric_limits<std::size_t>::max();
    std::size_t near_user = std::numeric_limits<std::size_t>::max();

    friend bool operator==(const Link&, const Link&) = default;
};

NormalizedGains normalized_gains(const ChannelRealization& realization, const Topology& topology);

/// AF relay gain G = 1 / sqrt(p_user * l |h|^2 + N0W).
double amplification_factor(double p_user, double gain_numerator, double n0w);

/// Cooperative end-to-end SINR.
///   user_power x, relay_power y, bs_power z, first_hop a, second_hop b, si gamma.
/// Exact:       x y a b / (1 + y b + x a + z gamma + z gamma x a)
/// Approximate: x y a b / (y b + x a + z gamma x a)
/// A zero denominator yields 0.
double sinr_cooperative(double user_power, double relay_power, double bs_power,
                        double first_hop, double second_hop, double si, SinrMode mode);

/// Direct near-user SINR p b / (1 + z gamma).
double sinr_noncooperative(double power, double gain, double bs_power, double si);

/// 0.5 * log2(1 + sinr); the half accounts for the two-slot frame.
double rate_from_sinr(double sinr);

/// Rate of one link on pair (i, j). first_power is the slot-1 transmit power
/// (far user or near user), second_power the slot-2 power (relay or near user).
double link_rate(const Link& link, std::size_t i, std::size_t j, double first_power,
                 double second_power, const NormalizedGains& gains, const BsPowerPolicy& bs,
                 SinrMode mode);

/// Total sum-rate over all active cooperative and non-cooperative indicators.
double total_sum_rate(const Assignment& assignment, const PowerProfile& powers,
                      const NormalizedGains& gains, const BsPowerPolicy& bs, SinrMode mode);

/// Rate credited to each user: entries [0, k1) are far users, [k1, k1 + k2) near
/// users transmitting their own data. Relays carry no own-data rate.
std::vector<double> per_user_rates(const Assignment& assignment, const PowerProfile& powers,
                                   const NormalizedGains& gains, const BsPowerPolicy& bs,
                                   SinrMode mode);

}  // namespace fdxsim
