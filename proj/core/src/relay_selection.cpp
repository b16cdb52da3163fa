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

#include "fdxsim/relay_selection.hpp"

#include <algorithm>
#include <string>

#include "fdxsim/errors.hpp"

namespace fdxsim {

namespace {

struct SchemeName {
    SelectionScheme scheme;
    std::string_view name;
};

constexpr std::array<SchemeName, 7> kSchemeNames{{
    {SelectionScheme::BestSinrWithSi, "best-sinr-si"},
    {SelectionScheme::BestSinrNoSi, "best-sinr-nosi"},
    {SelectionScheme::BestHarmonicMean, "harmonic-mean"},
    {SelectionScheme::ShortestUserDistance, "shortest-user-distance"},
    {SelectionScheme::ShortestTotalDistance, "shortest-total-distance"},
    {SelectionScheme::LeastLongestHop, "least-longest-hop"},
    {SelectionScheme::ShortestSecondHop, "shortest-second-hop"},
}};

// Larger is better for every scheme; distance criteria are negated.
double merit(SelectionScheme scheme, std::size_t k, std::size_t m, const Topology& topology,
             const NormalizedGains& gains, const ProvisionalPowers& powers, const BsPowerPolicy& bs) {
    const auto average_over_diagonal = [&](auto&& score) {
        double sum = 0.0;
        for (std::size_t i = 0; i < gains.n; ++i) sum += score(i);
        return gains.n == 0 ? 0.0 : sum / static_cast<double>(gains.n);
    };
    const PolarPoint& relay = topology.relays[m];
    const double d_u = euclidean_distance(topology.users[k], relay);
    const double d_r = relay.r;

    switch (scheme) {
    case SelectionScheme::BestSinrWithSi:
    case SelectionScheme::BestSinrNoSi: {
        const bool with_si = scheme == SelectionScheme::BestSinrWithSi;
        return average_over_diagonal(
            [&](std::size_t i) { return score_sinr(k, m, gains, powers, bs, with_si, i, i); });
    }
    case SelectionScheme::BestHarmonicMean:
        return average_over_diagonal(
            [&](std::size_t i) { return score_harmonic(k, m, gains, powers, i, i); });
    case SelectionScheme::ShortestUserDistance:
        return -d_u;
    case SelectionScheme::ShortestTotalDistance:
        return -(d_u + d_r);
    case SelectionScheme::LeastLongestHop:
        return -std::max(d_u, d_r);
    case SelectionScheme::ShortestSecondHop:
        return -d_r;
    }
    return 0.0;
}

}  // namespace

std::string_view to_string(SelectionScheme scheme) {
    for (const auto& entry : kSchemeNames) {
        if (entry.scheme == scheme) return entry.name;
    }
    return "unknown";
}

SelectionScheme parse_scheme(std::string_view name) {
    for (const auto& entry : kSchemeNames) {
        if (entry.name == name) return entry.scheme;
    }
    throw ConfigError("unknown selection scheme '" + std::string(name) + "'");
}

bool is_distance_based(SelectionScheme scheme) {
    switch (scheme) {
    case SelectionScheme::ShortestUserDistance:
    case SelectionScheme::ShortestTotalDistance:
    case SelectionScheme::LeastLongestHop:
    case SelectionScheme::ShortestSecondHop:
        return true;
    default:
        return false;
    }
}

ProvisionalPowers ProvisionalPowers::equal_split(double pmax_user_watts, std::size_t n) {
    const double share = n == 0 ? 0.0 : pmax_user_watts / static_cast<double>(n);
    return {share, share, share};
}

double score_sinr(std::size_t k, std::size_t m, const NormalizedGains& gains,
                  const ProvisionalPowers& powers, const BsPowerPolicy& bs, bool with_si,
                  std::size_t i, std::size_t j) {
    const double xa = powers.user * gains.user_to_relay(k, m, i);
    const double yb = powers.relay * gains.relay_to_bs_slot2(m, j);
    double denominator = xa + yb;
    if (with_si) denominator += xa * bs.p_b[j] * gains.si(j);
    if (!(denominator > 0.0)) return 0.0;
    return xa * yb / denominator;
}

double score_harmonic(std::size_t k, std::size_t m, const NormalizedGains& gains,
                      const ProvisionalPowers& powers, std::size_t i, std::size_t j) {
    const double xa = powers.user * gains.user_to_relay(k, m, i);
    const double yb = powers.relay * gains.relay_to_bs_slot2(m, j);
    if (!(xa > 0.0) || !(yb > 0.0)) return 0.0;
    return 2.0 / (1.0 / xa + 1.0 / yb);
}

std::size_t select_relay(SelectionScheme scheme, std::size_t k, const Topology& topology,
                         const NormalizedGains& gains, const ProvisionalPowers& powers,
                         const BsPowerPolicy& bs, std::span<const std::size_t> available) {
    if (available.empty()) {
        throw SelectionError("no candidate relay left for far user " + std::to_string(k));
    }
    std::size_t best = available.front();
    double best_merit = merit(scheme, k, best, topology, gains, powers, bs);
    for (std::size_t m : available.subspan(1)) {
        const double v = merit(scheme, k, m, topology, gains, powers, bs);
        if (v > best_merit || (v == best_merit && m < best)) {
            best = m;
            best_merit = v;
        }
    }
    return best;
}

SelectionResult select_all(SelectionScheme scheme, const Topology& topology,
                           const NormalizedGains& gains, const ProvisionalPowers& powers,
                           const BsPowerPolicy& bs, bool exclusive) {
    const std::size_t k1 = topology.num_far_users();
    const std::size_t k2 = topology.num_near_users();
    if (k2 == 0) throw ConfigError("relay selection needs at least one near user");
    if (exclusive && k1 > k2) {
        throw ConfigError("exclusive relays need k1 <= k2 (k1=" + std::to_string(k1) +
                          ", k2=" + std::to_string(k2) + ")");
    }

    SelectionResult result;
    result.relay_of.resize(k1);
    result.is_relay.assign(k2, false);
    std::vector<std::size_t> available(k2);
    for (std::size_t m = 0; m < k2; ++m) available[m] = m;

    for (std::size_t k = 0; k < k1; ++k) {
        const std::size_t m = select_relay(scheme, k, topology, gains, powers, bs, available);
        result.relay_of[k] = m;
        result.is_relay[m] = true;
        if (exclusive) std::erase(available, m);
    }
    return result;
}

}  // namespace fdxsim
