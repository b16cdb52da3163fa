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
#include <numbers>
#include <vector>

#include "fdxsim/rng.hpp"

namespace fdxsim {

/// Node position relative to the base station at the origin.
struct PolarPoint {
    double r = 0.0;      // meters
    double theta = 0.0;  // radians in [0, 2*pi)
};

inline constexpr PolarPoint kOrigin{0.0, 0.0};

/// Two-ring cell: candidate relays inside inner_radius, far users in the annulus
/// [inner_radius, outer_radius).
struct CellGeometry {
    double inner_radius = 100.0;
    double outer_radius = 300.0;
    double path_loss_exponent = 3.0;

    /// Throws ConfigError unless 0 < inner < outer and 2 <= exponent <= 6.
    void validate() const;
};

struct Topology {
    std::vector<PolarPoint> relays;  // near users, K2 of them
    std::vector<PolarPoint> users;   // far users, K1 of them
    CellGeometry geometry;

    std::size_t num_far_users() const { return users.size(); }
    std::size_t num_near_users() const { return relays.size(); }
};

/// Radius uniform on [0, R1) (uniform in radius, not area), angle uniform.
PolarPoint sample_relay_position(RngStream& rng, const CellGeometry& geometry);

/// Radius uniform on [R1, R2), angle uniform.
PolarPoint sample_user_position(RngStream& rng, const CellGeometry& geometry);

/// Law-of-cosines distance between two polar points.
double euclidean_distance(const PolarPoint& p1, const PolarPoint& p2);

/// Singular path loss r^-alpha to the origin. Throws DomainError at r = 0.
double path_loss_to_bs(const PolarPoint& p, double alpha);

/// Singular path loss d^-alpha between two nodes. Throws DomainError when the
/// points coincide.
double path_loss_between(const PolarPoint& p1, const PolarPoint& p2, double alpha);

/// Minimum node separation enforced by sample_topology (meters). Below it the
/// singular model yields a gain above one.
inline constexpr double kMinSeparation = 1.0;

/// Places k2 relays and k1 far users. Relays closer than kMinSeparation to the
/// BS, and users closer than that to the BS or to any relay, are redrawn.
Topology sample_topology(RngStream& rng, const CellGeometry& geometry,
                         std::size_t k1, std::size_t k2);

}  // namespace fdxsim
