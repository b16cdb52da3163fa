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

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "fdxsim/geometry.hpp"
#include "fdxsim/link_budget.hpp"

namespace fdxsim {

enum class SelectionScheme {
    BestSinrWithSi,
    BestSinrNoSi,
    BestHarmonicMean,
    ShortestUserDistance,
    ShortestTotalDistance,
    LeastLongestHop,
    ShortestSecondHop,
};

inline constexpr std::array<SelectionScheme, 7> kAllSchemes{
    SelectionScheme::BestSinrWithSi,       SelectionScheme::BestSinrNoSi,
    SelectionScheme::BestHarmonicMean,     SelectionScheme::ShortestUserDistance,
    SelectionScheme::ShortestTotalDistance, SelectionScheme::LeastLongestHop,
    SelectionScheme::ShortestSecondHop,
};

/// Config names: "best-sinr-si", "best-sinr-nosi", "harmonic-mean",
/// "shortest-user-distance", "shortest-total-distance", "least-longest-hop",
/// "shortest-second-hop".
std::string_view to_string(SelectionScheme scheme);

/// Throws ConfigError for unknown names.
SelectionScheme parse_scheme(std::string_view name);

bool is_distance_based(SelectionScheme scheme);

/// Transmit powers assumed before power allocation has run.
struct ProvisionalPowers {
    double user = 0.0;       // far user, slot 1
    double relay = 0.0;      // relay, slot 2
    double near_user = 0.0;  // non-cooperative near user, each slot

    /// Every node spreads its budget evenly over n subcarriers.
    static ProvisionalPowers equal_split(double pmax_user_watts, std::size_t n);
};

struct SelectionResult {
    std::vector<std::size_t> relay_of;  // far user k -> near user m
    std::vector<bool> is_relay;         // per near user
};

/// Two-hop SINR used for ranking relays on pair (i, j). With SI the denominator
/// is x a + y b + x z gamma a; without SI the last term is dropped.
double score_sinr(std::size_t k, std::size_t m, const NormalizedGains& gains,
                  const ProvisionalPowers& powers, const BsPowerPolicy& bs, bool with_si,
                  std::size_t i, std::size_t j);

/// Harmonic mean 2 / (1/(x a) + 1/(y b)) of the two hop SNRs; 0 if either hop is 0.
double score_harmonic(std::size_t k, std::size_t m, const NormalizedGains& gains,
                      const ProvisionalPowers& powers, std::size_t i, std::size_t j);

/// Best relay for far user k among `available`. Score-based schemes average the
/// score over the diagonal pairs (i, i). Ties go to the lowest index.
/// Throws SelectionError when `available` is empty.
std::size_t select_relay(SelectionScheme scheme, std::size_t k, const Topology& topology,
                         const NormalizedGains& gains, const ProvisionalPowers& powers,
                         const BsPowerPolicy& bs, std::span<const std::size_t> available);

/// One relay per far user, chosen greedily in ascending far-user order. In
/// exclusive mode a relay serves at most one far user and k1 > k2 is a
/// ConfigError.
SelectionResult select_all(SelectionScheme scheme, const Topology& topology,
                           const NormalizedGains& gains, const ProvisionalPowers& powers,
                           const BsPowerPolicy& bs, bool exclusive = true);

}  // namespace fdxsim
