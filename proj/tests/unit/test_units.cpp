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

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "fdxsim/rng.hpp"
#include "fdxsim/units.hpp"

namespace fdxsim {
namespace {

TEST(Units, DbmToWatts) {
    EXPECT_DOUBLE_EQ(dbm_to_watts(30.0), 1.0);
    EXPECT_DOUBLE_EQ(dbm_to_watts(20.0), 0.1);
    EXPECT_DOUBLE_EQ(dbm_to_watts(0.0), 1e-3);
    EXPECT_EQ(dbm_to_watts(-std::numeric_limits<double>::infinity()), 0.0);
}

TEST(Units, WattsToDbm) {
    EXPECT_DOUBLE_EQ(watts_to_dbm(10.0), 40.0);
    EXPECT_EQ(watts_to_dbm(0.0), -std::numeric_limits<double>::infinity());
}

TEST(Units, RoundTripIsLossless) {
    RngStream rng(3);
    for (int t = 0; t < 1000; ++t) {
        const double dbm = rng.uniform(-50.0, 60.0);
        EXPECT_NEAR(watts_to_dbm(dbm_to_watts(dbm)), dbm, 1e-12 * std::abs(dbm) + 1e-12);
        const double w = std::exp(rng.uniform(-20.0, 5.0));
        EXPECT_NEAR(dbm_to_watts(watts_to_dbm(w)), w, 1e-12 * w);
    }
}

TEST(Units, NoisePowerPerSubcarrier) {
    // -174 dBm/Hz over 20 kHz: 10^(-20.4) W/Hz * 2e4 Hz.
    EXPECT_NEAR(noise_power_watts(-174.0, 20e3), std::pow(10.0, -20.4) * 2e4, 1e-28);
}

TEST(Rng, StreamsDependOnSeedAndTrial) {
    RngStream a(11, 3), b(11, 3), c(11, 4), d(12, 3);
    const double va = a.uniform(0.0, 1.0);
    EXPECT_EQ(va, b.uniform(0.0, 1.0));
    EXPECT_NE(va, c.uniform(0.0, 1.0));
    EXPECT_NE(va, d.uniform(0.0, 1.0));
}

TEST(Rng, UniformIsHalfOpen) {
    RngStream rng(5);
    for (int t = 0; t < 100000; ++t) {
        const double v = rng.uniform(2.0, 2.0 + 1e-13);
        EXPECT_GE(v, 2.0);
        EXPECT_LT(v, 2.0 + 1e-13);
    }
}

}  // namespace
}  // namespace fdxsim
