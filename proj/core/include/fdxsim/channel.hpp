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

#include <complex>
#include <cstddef>
#include <vector>

#include "fdxsim/geometry.hpp"
#include "fdxsim/rng.hpp"

namespace fdxsim {

using Complex = std::complex<double>;

/// Base-station self-interference model.
struct SiConfig {
    bool enabled = true;
    double residual_factor = 1.0;  // linear scale on |H_SI|^2, in [0, 1]

    void validate() const;
};

/// Small-scale fading for one Monte Carlo trial; held fixed across both slots.
struct ChannelRealization {
    std::size_t k1 = 0;  // far users
    std::size_t k2 = 0;  // near users (candidate relays)
    std::size_t n = 0;   // subcarriers

    std::vector<Complex> h;     // far user k -> near user m on subcarrier i, (k, m, i)
    std::vector<Complex> g1;    // near user m -> BS, slot 1, (m, i)
    std::vector<Complex> g2;    // near user m -> BS, slot 2, (m, j)
    std::vector<Complex> h_si;  // BS transmit -> BS receive leakage, (j)
    double n0w = 0.0;           // noise power per subcarrier, watts

    const Complex& user_to_relay(std::size_t k, std::size_t m, std::size_t i) const {
        return h[(k * k2 + m) * n + i];
    }
    const Complex& relay_to_bs_slot1(std::size_t m, std::size_t i) const { return g1[m * n + i]; }
    const Complex& relay_to_bs_slot2(std::size_t m, std::size_t j) const { return g2[m * n + j]; }
};

/// Zero-mean, unit-variance circularly symmetric complex Gaussian draw.
Complex draw_complex_gaussian(RngStream& rng);

/// Draws h, g1, g2 and h_si i.i.d. in that order. The SI vector is always drawn
/// so that enabling or disabling SI leaves every other coefficient unchanged;
/// it is then zeroed (disabled) or scaled by sqrt(residual_factor).
ChannelRealization make_realization(const Topology& topology, std::size_t n_subcarriers,
                                    const SiConfig& si, double n0w, RngStream& rng);

}  // namespace fdxsim
