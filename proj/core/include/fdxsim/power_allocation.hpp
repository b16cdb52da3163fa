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
#include <vector>

#include "fdxsim/assignment.hpp"
#include "fdxsim/link_budget.hpp"
#include "fdxsim/relay_selection.hpp"

namespace fdxsim {

/// Transmit powers in watts, indexed by slot-1 subcarrier i of the pair
/// (i, pair_of[i]). For a cooperative pair slot1 is the far user's power and
/// slot2 the relay's; for a direct pair both belong to the near user.
struct PowerProfile {
    std::vector<double> slot1;
    std::vector<double> slot2;
};

struct Budgets {
    double pmax_coop = 0.1;  // per cooperative (user, relay) pair, both hops, watts
    double pmax_nc = 0.1;    // per direct near user, per slot, watts
    double rmin_coop = 0.1;  // per far user, bit/s/Hz
    double rmin_nc = 0.1;    // per direct near user, per slot, bit/s/Hz
};

struct SolverOptions {
    double mu_initial = 1.0;
    double mu_decrease = 0.1;
    double gap_tolerance = 1e-6;   // on (constraint count) * mu, scaled by min(1, objective)
    double armijo_slope = 1e-4;
    double backtrack_factor = 0.5;
    double interior_shrink = 0.99; // start from the equal-power point scaled by this
    int max_newton_per_center = 200;
    int max_outer = 80;
};

struct SolverReport {
    double objective = 0.0;   // at the returned powers, in the solve mode
    int iterations = 0;       // inner (Newton) steps over all barrier stages
    int outer_iterations = 0;
    double kkt_residual = 0.0;  // infinity norm of the Lagrangian gradient, scaled powers
    double duality_gap = 0.0;
    bool feasible = false;
    bool qos_relaxed = false;
};

struct PowerSolution {
    PowerProfile powers;
    SolverReport report;
};

struct ObjectiveValue {
    double value = 0.0;
    std::vector<double> gradient;  // d/d slot1[0..n), then d/d slot2[0..n)
};

/// Sum-rate and its gradient with respect to every transmit power.
ObjectiveValue objective_and_gradient(const PowerProfile& powers, const Assignment& assignment,
                                      const NormalizedGains& gains, const BsPowerPolicy& bs,
                                      SinrMode mode = SinrMode::Approximate);

using Matrix2 = std::array<std::array<double, 2>, 2>;

/// Hessian of f(x, y) = 1 + a b x y / (a c x + b y) with respect to (x, y),
/// written in the expanded form with s1 and s2 = (b y + a c x)^2.
/// Throws DomainError when b y + a c x <= 0.
Matrix2 coop_hessian_closed_form(double x, double y, double a, double b, double c);

/// Eigenvalues of the matrix above: {0, -(2 c a^2 b^2 (x^2 + y^2)) / (a c x + b y)^3}.
std::array<double, 2> coop_hessian_eigenvalues(double x, double y, double a, double b, double c);

struct NcCurvature {
    double hessian = 0.0;                  // d^2/dx^2 of log2(1 + b x / (c z + 1))
    std::array<double, 2> eigenvalues{};   // {0, -b^2 / (ln 2 (b x + c z + 1)^2)}
};

/// Throws DomainError when c z + 1 <= 0.
NcCurvature nc_hessian_and_eigenvalues(double x, double b, double c, double z);

/// Each budget split evenly over the pairs it covers; a cooperative budget gives
/// half to the far user and half to the relay on each of its pairs.
PowerProfile equal_power_baseline(const Assignment& assignment, const Budgets& budgets);

/// Fills every pair with the provisional per-subcarrier powers.
PowerProfile provisional_profile(const Assignment& assignment, const ProvisionalPowers& powers);

struct ConstraintCheck {
    double min_power = 0.0;                  // most negative power (>= 0 when feasible)
    double max_budget_excess = 0.0;          // max over budgets of (sum - pmax) / pmax
    double max_qos_shortfall = 0.0;          // max over users of rmin - rate
    bool qos_satisfiable = true;             // every user with rmin > 0 holds a pair
};

ConstraintCheck check_constraints(const Assignment& assignment, const PowerProfile& powers,
                                  const NormalizedGains& gains, const BsPowerPolicy& bs,
                                  const Budgets& budgets, SinrMode mode);

/// Maximizes the sum-rate over all transmit powers for a fixed assignment with a
/// logarithmic-barrier interior-point method: Newton centering steps with
/// Armijo backtracking, mu decreased tenfold per stage. Power budgets are hard
/// constraints; per-user minimum rates are enforced as long as they are
/// attainable, otherwise they are dropped and report.qos_relaxed is set.
/// Throws InfeasibleError when a budget is zero but its users need a positive
/// rate.
PowerSolution solve(const Assignment& assignment, const NormalizedGains& gains,
                    const BsPowerPolicy& bs, const Budgets& budgets,
                    SinrMode mode = SinrMode::Approximate, const SolverOptions& options = {});

}  // namespace fdxsim
