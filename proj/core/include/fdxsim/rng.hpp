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

#include <cstdint>
#include <random>

namespace fdxsim {

/// A reproducible random stream. Every stochastic operation takes one of these
/// explicitly; a stream is not thread-safe, so give each worker its own.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(make_seq(seed, 0)) {}

    /// Stream for one Monte Carlo trial. Depends only on (seed, trial_index),
    /// which gives common random numbers across compared configurations.
    RngStream(std::uint64_t seed, std::uint64_t trial_index)
        : engine_(make_seq(seed, trial_index)) {}

    /// Uniform on the half-open interval [lo, hi).
    double uniform(double lo, double hi) {
        std::uniform_real_distribution<double> dist(lo, hi);
        for (;;) {
            const double v = dist(engine_);
            // libstdc++ can round up to hi; redraw to keep the interval half-open.
            if (v < hi || !(lo < hi)) return v;
        }
    }

    double normal(double mean, double stddev) {
        std::normal_distribution<double> dist(mean, stddev);
        return dist(engine_);
    }

    std::mt19937_64& engine() { return engine_; }

private:
    static std::mt19937_64 make_seq(std::uint64_t seed, std::uint64_t trial) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed),
                          static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(trial),
                          static_cast<std::uint32_t>(trial >> 32)};
        return std::mt19937_64(seq);
    }

    std::mt19937_64 engine_;
};

}  // namespace fdxsim
