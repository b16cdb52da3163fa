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
#include <cstdint>
#include <functional>
#include <string>

#include "fdxsim/power_allocation.hpp"

namespace fdxsim::checks {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Objective evaluator under test; defaults to fdxsim::objective_and_gradient.
using ObjectiveFn = std::function<ObjectiveValue(const PowerProfile&, const Assignment&,
                                                 const NormalizedGains&, const BsPowerPolicy&, SinrMode)>;

/// Munkres against exhaustive permutation search on random 6 x 6 matrices, exact equality.
SuiteResult munkres_suite(std::size_t matrices, std::uint64_t seed);

/// Closed-form cooperative and direct-link Hessians and eigenvalues against
/// finite differences and a numerical eigensolver at random positive points.
SuiteResult hessian_suite(std::size_t points, std::uint64_t seed);

/// Analytic objective gradient against central differences on random
/// K1 = K2 = 4, N = 8 instances, both SINR modes, SI on and off.
SuiteResult gradient_suite(std::size_t instances, std::uint64_t seed, const ObjectiveFn& objective = {});

/// Radius and angle KS tests, fading moments and KS, slot independence and SI scaling.
SuiteResult distribution_suite(std::size_t samples, std::uint64_t seed);

constexpr double kGradientTolerance = 1e-5;
constexpr double kHessianRelTolerance = 1e-4;
constexpr double kEigenTolerance = 1e-6;
constexpr double kEigenCeiling = 1e-9;

}  // namespace fdxsim::checks
