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
#include <vector>

#include "fdxsim/assignment.hpp"
#include "fdxsim/link_budget.hpp"

namespace fdxsim::testing {

inline NormalizedGains zero_gains(std::size_t k1, std::size_t k2, std::size_t n) {
    NormalizedGains g;
    g.k1 = k1;
    g.k2 = k2;
    g.n = n;
    g.first_hop.assign(k1 * k2 * n, 0.0);
    g.second_hop1.assign(k2 * n, 0.0);
    g.second_hop2.assign(k2 * n, 0.0);
    g.self_interference.assign(n, 0.0);
    return g;
}

inline Link coop(std::size_t k, std::size_t m) { return {LinkMode::Cooperative, k, m}; }
inline Link direct(std::size_t m) { return {LinkMode::NonCooperative, Link{}.far_user, m}; }

inline Assignment make_assignment(std::size_t k1, std::size_t k2, std::vector<std::size_t> pair_of,
                                  std::vector<Link> links) {
    Assignment a;
    a.k1 = k1;
    a.k2 = k2;
    a.n = pair_of.size();
    a.pair_of = std::move(pair_of);
    a.links = std::move(links);
    a.is_relay.assign(k2, false);
    for (const Link& l : a.links) {
        if (l.mode == LinkMode::Cooperative) a.is_relay[l.near_user] = true;
    }
    return a;
}

}  // namespace fdxsim::testing
