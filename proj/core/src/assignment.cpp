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

#include "fdxsim/assignment.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fdxsim/errors.hpp"

namespace fdxsim {

int Assignment::rho(std::size_t k, std::size_t m, std::size_t i, std::size_t j) const {
    const Link& link = links[i];
    return pair_of[i] == j && link.mode == LinkMode::Cooperative && link.far_user == k &&
           link.near_user == m;
}

int Assignment::sigma1(std::size_t m, std::size_t i) const {
    const Link& link = links[i];
    return link.mode == LinkMode::NonCooperative && link.near_user == m;
}

int Assignment::sigma2(std::size_t m, std::size_t j) const {
    for (std::size_t i = 0; i < n; ++i) {
        if (pair_of[i] == j) return sigma1(m, i);
    }
    return 0;
}

std::size_t Assignment::cells_owned_by(const Link& owner) const {
    std::size_t count = 0;
    for (const Link& link : links) {
        if (link.mode != owner.mode) continue;
        if (owner.mode == LinkMode::Cooperative ? link.far_user == owner.far_user
                                                : link.near_user == owner.near_user) {
            ++count;
        }
    }
    return count;
}

std::size_t Assignment::cooperative_cells() const {
    std::size_t count = 0;
    for (const Link& link : links) count += link.mode == LinkMode::Cooperative;
    return count;
}

std::vector<Link> candidate_links(const SelectionResult& selection) {
    std::vector<Link> out;
    for (std::size_t k = 0; k < selection.relay_of.size(); ++k) {
        out.push_back({LinkMode::Cooperative, k, selection.relay_of[k]});
    }
    for (std::size_t m = 0; m < selection.is_relay.size(); ++m) {
        if (!selection.is_relay[m]) {
            out.push_back({LinkMode::NonCooperative, std::numeric_limits<std::size_t>::max(), m});
        }
    }
    return out;
}

double candidate_rate(const Link& link, std::size_t i, std::size_t j, const NormalizedGains& gains,
                      const ProvisionalPowers& powers, const BsPowerPolicy& bs, SinrMode mode) {
    if (link.mode == LinkMode::Cooperative) {
        return link_rate(link, i, j, powers.user, powers.relay, gains, bs, mode);
    }
    return link_rate(link, i, j, powers.near_user, powers.near_user, gains, bs, mode);
}

PairValueMatrix build_pair_matrix(const SelectionResult& selection, const NormalizedGains& gains,
                                  const ProvisionalPowers& powers, const BsPowerPolicy& bs,
                                  SinrMode mode) {
    const std::vector<Link> candidates = candidate_links(selection);
    if (candidates.empty()) throw SelectionError("pair table has no candidate link");

    PairValueMatrix matrix;
    matrix.k1 = gains.k1;
    matrix.k2 = gains.k2;
    matrix.n = gains.n;
    matrix.is_relay = selection.is_relay;
    matrix.value.resize(matrix.n * matrix.n);
    matrix.winner.resize(matrix.n * matrix.n);
    for (std::size_t i = 0; i < matrix.n; ++i) {
        for (std::size_t j = 0; j < matrix.n; ++j) {
            double best = -1.0;
            Link best_link;
            for (const Link& link : candidates) {
                const double r = candidate_rate(link, i, j, gains, powers, bs, mode);
                if (r > best) {
                    best = r;
                    best_link = link;
                }
            }
            matrix.value[i * matrix.n + j] = best;
            matrix.winner[i * matrix.n + j] = best_link;
        }
    }
    return matrix;
}

std::vector<std::size_t> munkres_maximize(std::span<const double> values, std::size_t n) {
    if (values.size() != n * n) throw std::invalid_argument("munkres: matrix is not n x n");
    double max_entry = -std::numeric_limits<double>::infinity();
    for (double v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("munkres: non-finite entry");
        max_entry = std::max(max_entry, v);
    }
    if (n == 0) return {};

    // Shortest augmenting path with row/column potentials on cost = max - value.
    // Rows and columns are 1-based; index 0 is the virtual source.
    constexpr double kInf = std::numeric_limits<double>::infinity();
    const auto cost = [&](std::size_t row, std::size_t col) {
        return max_entry - values[(row - 1) * n + (col - 1)];
    };
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> match_col(n + 1, 0), way(n + 1, 0);

    for (std::size_t row = 1; row <= n; ++row) {
        match_col[0] = row;
        std::size_t col0 = 0;
        std::vector<double> min_slack(n + 1, kInf);
        std::vector<bool> used(n + 1, false);
        do {
            used[col0] = true;
            const std::size_t row0 = match_col[col0];
            double delta = kInf;
            std::size_t col1 = 0;
            for (std::size_t col = 1; col <= n; ++col) {
                if (used[col]) continue;
                const double reduced = cost(row0, col) - u[row0] - v[col];
                if (reduced < min_slack[col]) {
                    min_slack[col] = reduced;
                    way[col] = col0;
                }
                if (min_slack[col] < delta) {
                    delta = min_slack[col];
                    col1 = col;
                }
            }
            for (std::size_t col = 0; col <= n; ++col) {
                if (used[col]) {
                    u[match_col[col]] += delta;
                    v[col] -= delta;
                } else {
                    min_slack[col] -= delta;
                }
            }
            col0 = col1;
        } while (match_col[col0] != 0);
        do {
            const std::size_t col1 = way[col0];
            match_col[col0] = match_col[col1];
            col0 = col1;
        } while (col0 != 0);
    }

    std::vector<std::size_t> pair_of(n);
    for (std::size_t col = 1; col <= n; ++col) pair_of[match_col[col] - 1] = col - 1;
    return pair_of;
}

Assignment finalize_assignment(const PairValueMatrix& matrix, std::span<const std::size_t> pair_of) {
    const std::size_t n = matrix.n;
    if (pair_of.size() != n) throw std::invalid_argument("finalize_assignment: wrong permutation size");
    std::vector<bool> seen(n, false);
    for (std::size_t j : pair_of) {
        if (j >= n || seen[j]) throw std::invalid_argument("finalize_assignment: not a permutation");
        seen[j] = true;
    }
    Assignment a;
    a.k1 = matrix.k1;
    a.k2 = matrix.k2;
    a.n = n;
    a.is_relay = matrix.is_relay;
    a.pair_of.assign(pair_of.begin(), pair_of.end());
    a.links.resize(n);
    for (std::size_t i = 0; i < n; ++i) a.links[i] = matrix.winner_at(i, pair_of[i]);
    return a;
}

std::size_t repair_qos(Assignment& assignment, const SelectionResult& selection,
                       const NormalizedGains& gains, const ProvisionalPowers& powers,
                       const BsPowerPolicy& bs, SinrMode mode, bool far_users_need_rate,
                       bool near_users_need_rate) {
    std::vector<Link> unserved;
    for (const Link& link : candidate_links(selection)) {
        const bool needs = link.mode == LinkMode::Cooperative ? far_users_need_rate
                                                              : near_users_need_rate;
        if (needs && assignment.cells_owned_by(link) == 0) unserved.push_back(link);
    }

    std::size_t moved = 0;
    for (const Link& newcomer : unserved) {
        std::size_t best_cell = assignment.n;
        double best_loss = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < assignment.n; ++i) {
            const Link& holder = assignment.links[i];
            if (assignment.cells_owned_by(holder) < 2) continue;
            const std::size_t j = assignment.pair_of[i];
            const double loss = candidate_rate(holder, i, j, gains, powers, bs, mode) -
                                candidate_rate(newcomer, i, j, gains, powers, bs, mode);
            if (loss < best_loss) {
                best_loss = loss;
                best_cell = i;
            }
        }
        if (best_cell == assignment.n) continue;
        assignment.links[best_cell] = newcomer;
        ++moved;
    }
    return moved;
}

}  // namespace fdxsim
