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
#include <span>
#include <vector>

#include "fdxsim/link_budget.hpp"
#include "fdxsim/relay_selection.hpp"

namespace fdxsim {

/// N x N table of the best achievable rate on each subcarrier pair (i, j), with
/// rows indexing slot-1 subcarriers and columns slot-2 subcarriers.
struct PairValueMatrix {
    std::size_t k1 = 0;
    std::size_t k2 = 0;
    std::size_t n = 0;
    std::vector<double> value;  // row-major, bit/s/Hz
    std::vector<Link> winner;   // row-major, the link that achieves value
    std::vector<bool> is_relay; // per near user, copied from the selection

    double at(std::size_t i, std::size_t j) const { return value[i * n + j]; }
    const Link& winner_at(std::size_t i, std::size_t j) const { return winner[i * n + j]; }
};

/// Subcarrier pairing plus the link carried on each pair.
struct Assignment {
    std::size_t k1 = 0;
    std::size_t k2 = 0;
    std::size_t n = 0;
    std::vector<std::size_t> pair_of;  // slot-1 subcarrier i -> slot-2 subcarrier j
    std::vector<Link> links;           // indexed by slot-1 subcarrier i
    std::vector<bool> is_relay;        // per near user; relays carry no own data

    /// 1 if far user k uses relay m on pair (i, j).
    int rho(std::size_t k, std::size_t m, std::size_t i, std::size_t j) const;
    /// 1 if near user m transmits directly on subcarrier i in slot 1.
    int sigma1(std::size_t m, std::size_t i) const;
    /// 1 if near user m transmits directly on subcarrier j in slot 2.
    int sigma2(std::size_t m, std::size_t j) const;

    /// Number of pairs held by the owner of `link` (far user if cooperative,
    /// near user otherwise).
    std::size_t cells_owned_by(const Link& link) const;

    std::size_t cooperative_cells() const;
};

/// Every link that may compete for a pair: one cooperative link per far user
/// over its selected relay (ascending k), then one direct link per near user
/// that is not a relay (ascending m).
std::vector<Link> candidate_links(const SelectionResult& selection);

/// Rate of `link` on (i, j) at provisional powers.
double candidate_rate(const Link& link, std::size_t i, std::size_t j,
                      const NormalizedGains& gains, const ProvisionalPowers& powers,
                      const BsPowerPolicy& bs, SinrMode mode);

/// Winner-takes-all pair table. Throws SelectionError when there is no candidate.
PairValueMatrix build_pair_matrix(const SelectionResult& selection, const NormalizedGains& gains,
                                  const ProvisionalPowers& powers, const BsPowerPolicy& bs,
                                  SinrMode mode);

/// Maximum-weight perfect matching on a row-major n x n matrix (Hungarian
/// method with potentials, O(n^3)). Returns the column matched to each row.
/// Throws std::invalid_argument for a non-square or non-finite input.
std::vector<std::size_t> munkres_maximize(std::span<const double> values, std::size_t n);

/// Indicators from the winners along the permutation. Each slot-1 and slot-2
/// subcarrier carries exactly one link.
Assignment finalize_assignment(const PairValueMatrix& matrix, std::span<const std::size_t> pair_of);

/// Gives a pair to every user that has a positive rate requirement but no pair,
/// taking it from a user holding at least two pairs where the rate loss is
/// smallest. Returns the number of reassigned pairs. Users that cannot be served
/// are left without a pair.
std::size_t repair_qos(Assignment& assignment, const SelectionResult& selection,
                       const NormalizedGains& gains, const ProvisionalPowers& powers,
                       const BsPowerPolicy& bs, SinrMode mode, bool far_users_need_rate,
                       bool near_users_need_rate);

}  // namespace fdxsim
