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

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "fdxsim/assignment.hpp"
#include "fdxsim/geometry.hpp"
#include "fdxsim/link_budget.hpp"
#include "fdxsim/power_allocation.hpp"
#include "fdxsim/simulation.hpp"

namespace fdxsim::oracle {

/// Kolmogorov-Smirnov statistic sup |F_n(x) - F(x)| of `samples` against `cdf`.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// Asymptotic one-sample KS critical value at significance 0.01.
double ks_critical_value_1pct(std::size_t n);

/// Largest sum over all n! permutations of a row-major n x n matrix, each sum
/// accumulated in row order.
double brute_force_max_assignment(std::span<const double> values, std::size_t n);

/// Row-order total of `values` along a permutation.
double assignment_total(std::span<const double> values, std::size_t n, std::span<const std::size_t> pair_of);

/// Central differences with per-coordinate step h_i = rel_step * max(|x_i|, floor).
std::vector<double> central_difference_gradient(const std::function<double(std::span<const double>)>& f,
                                                std::span<const double> x, double rel_step,
                                                double floor = 1.0);

/// Second-order central differences of a function of two variables.
std::array<std::array<double, 2>, 2> finite_difference_hessian(
    const std::function<double(double, double)>& f, double x, double y, double hx, double hy);

/// Eigenvalues (ascending) of a symmetric 2x2 matrix by a general eigensolver.
std::array<double, 2> symmetric_eigenvalues(const std::array<std::array<double, 2>, 2>& m);

/// Distance from Cartesian coordinates rather than the law of cosines.
double cartesian_distance(const PolarPoint& a, const PolarPoint& b);

/// Normalized gains re-evaluated entry by entry with scalar arithmetic.
double reference_first_hop(const Topology& topology, const ChannelRealization& ch, std::size_t k,
                           std::size_t m, std::size_t i);
double reference_second_hop(const Topology& topology, const ChannelRealization& ch, std::size_t m,
                            std::size_t j, int slot);

/// Sum-rate by explicit enumeration of every (k, m, i, j) cooperative indicator
/// and every (m, i) / (m, j) direct indicator, with the SINR written out inline.
double reference_sum_rate(const Assignment& assignment, const PowerProfile& powers,
                          const NormalizedGains& gains, const BsPowerPolicy& bs, bool exact);

/// Front half of a trial (placement through QoS repair) for a given scenario,
/// so tests can exercise the power allocator on realistic assignments.
struct Instance {
    Topology topology;
    ChannelRealization channel;
    NormalizedGains gains;
    BsPowerPolicy bs;
    Budgets budgets;
    ProvisionalPowers provisional;
    SelectionResult selection;
    Assignment assignment;
};

Instance make_instance(const ScenarioConfig& config, std::size_t trial_index);

}  // namespace fdxsim::oracle
