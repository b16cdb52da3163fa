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

#include "fdxsim/channel.hpp"

#include <cmath>
#include <numbers>

#include "fdxsim/errors.hpp"

namespace fdxsim {

void SiConfig::validate() const {
    if (!(residual_factor >= 0.0 && residual_factor <= 1.0)) {
        throw ConfigError("si.residual_factor must lie in [0, 1]");
    }
}

Complex draw_complex_gaussian(RngStream& rng) {
    constexpr double kComponentStddev = std::numbers::sqrt2 / 2.0;  // variance 1/2 each
    const double re = rng.normal(0.0, kComponentStddev);
    const double im = rng.normal(0.0, kComponentStddev);
    return {re, im};
}

ChannelRealization make_realization(const Topology& topology, std::size_t n_subcarriers,
                                    const SiConfig& si, double n0w, RngStream& rng) {
    if (n_subcarriers == 0) throw ConfigError("n_subcarriers must be >= 1");
    if (!(n0w > 0.0)) throw ConfigError("noise power must be > 0");
    si.validate();

    ChannelRealization out;
    out.k1 = topology.num_far_users();
    out.k2 = topology.num_near_users();
    out.n = n_subcarriers;
    out.n0w = n0w;

    auto fill = [&rng](std::vector<Complex>& v, std::size_t count) {
        v.resize(count);
        for (Complex& c : v) c = draw_complex_gaussian(rng);
    };
    fill(out.h, out.k1 * out.k2 * out.n);
    fill(out.g1, out.k2 * out.n);
    fill(out.g2, out.k2 * out.n);
    fill(out.h_si, out.n);

    const double amplitude = si.enabled ? std::sqrt(si.residual_factor) : 0.0;
    for (Complex& c : out.h_si) c *= amplitude;
    return out;
}

}  // namespace fdxsim
