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

#include "fdxsim/geometry.hpp"

#include <cmath>
#include <string>

#include "fdxsim/errors.hpp"

namespace fdxsim {

void CellGeometry::validate() const {
    if (!(inner_radius > 0.0)) {
        throw ConfigError("geometry.inner_radius must be > 0, got " + std::to_string(inner_radius));
    }
    if (!(outer_radius > inner_radius)) {
        throw ConfigError("geometry.outer_radius must exceed inner_radius");
    }
    if (!(path_loss_exponent >= 2.0 && path_loss_exponent <= 6.0)) {
        throw ConfigError("geometry.alpha must lie in [2, 6], got " +
                          std::to_string(path_loss_exponent));
    }
}

namespace {

double sample_angle(RngStream& rng) { return rng.uniform(0.0, 2.0 * std::numbers::pi); }

double squared_distance(const PolarPoint& p1, const PolarPoint& p2) {
    const double d2 = p1.r * p1.r + p2.r * p2.r - 2.0 * p1.r * p2.r * std::cos(p1.theta - p2.theta);
    return d2 > 0.0 ? d2 : 0.0;  // cancellation can leave a tiny negative
}

}  // namespace

PolarPoint sample_relay_position(RngStream& rng, const CellGeometry& geometry) {
    const double r = rng.uniform(0.0, geometry.inner_radius);
    return {r, sample_angle(rng)};
}

PolarPoint sample_user_position(RngStream& rng, const CellGeometry& geometry) {
    const double r = rng.uniform(geometry.inner_radius, geometry.outer_radius);
    return {r, sample_angle(rng)};
}

double euclidean_distance(const PolarPoint& p1, const PolarPoint& p2) {
    return std::sqrt(squared_distance(p1, p2));
}

double path_loss_to_bs(const PolarPoint& p, double alpha) {
    if (!(p.r > 0.0)) throw DomainError("singular path loss at origin");
    return std::pow(p.r * p.r, -alpha / 2.0);
}

double path_loss_between(const PolarPoint& p1, const PolarPoint& p2, double alpha) {
    const double d2 = squared_distance(p1, p2);
    if (!(d2 > 0.0)) throw DomainError("singular path loss between coincident points");
    return std::pow(d2, -alpha / 2.0);
}

Topology sample_topology(RngStream& rng, const CellGeometry& geometry, std::size_t k1,
                         std::size_t k2) {
    geometry.validate();
    Topology topology;
    topology.geometry = geometry;
    topology.relays.reserve(k2);
    topology.users.reserve(k1);

    while (topology.relays.size() < k2) {
        const PolarPoint p = sample_relay_position(rng, geometry);
        if (p.r >= kMinSeparation) topology.relays.push_back(p);
    }
    while (topology.users.size() < k1) {
        const PolarPoint p = sample_user_position(rng, geometry);
        bool ok = p.r >= kMinSeparation;
        for (const PolarPoint& relay : topology.relays) {
            if (!ok) break;
            ok = euclidean_distance(p, relay) >= kMinSeparation;
        }
        if (ok) topology.users.push_back(p);
    }
    return topology;
}

}  // namespace fdxsim
