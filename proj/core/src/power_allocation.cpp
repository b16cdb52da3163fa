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

#include "fdxsim/power_allocation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "fdxsim/errors.hpp"

namespace fdxsim {

namespace {

constexpr double kHalfOverLn2 = 0.5 / std::numbers::ln2;
constexpr std::size_t kFixed = std::numeric_limits<std::size_t>::max();

// Rate contributions of one pair and their derivatives with respect to the
// physical slot-1 and slot-2 powers. A cooperative pair couples both powers; a
// direct pair is the sum of two independent single-slot rates (v1 and v2).
struct CellLocal {
    double v1 = 0.0, v2 = 0.0;
    double g1 = 0.0, g2 = 0.0;
    double h11 = 0.0, h12 = 0.0, h22 = 0.0;
};

// Derivatives of 0.5 log2(1 + K x y / (d0 + d1 x + d2 y)); the value is filled
// in by the caller from the shared SINR formula.
CellLocal coop_local(double x, double y, double a, double b, double interference, SinrMode mode) {
    CellLocal out;
    const double d0 = mode == SinrMode::Exact ? 1.0 + interference : 0.0;
    const double d1 = a * (1.0 + interference);
    const double d2 = b;
    const double k = a * b;
    const double den = d0 + d1 * x + d2 * y;
    if (!(den > 0.0)) return out;
    const double den2 = den * den;
    const double den3 = den2 * den;
    const double f = 1.0 + k * x * y / den;
    const double gx = k * y * (d0 + d2 * y) / den2;
    const double gy = k * x * (d0 + d1 * x) / den2;
    const double gxx = -2.0 * d1 * k * y * (d0 + d2 * y) / den3;
    const double gyy = -2.0 * d2 * k * x * (d0 + d1 * x) / den3;
    const double gxy = k * (d0 * d0 + d0 * d1 * x + d0 * d2 * y + 2.0 * d1 * d2 * x * y) / den3;
    out.g1 = kHalfOverLn2 * gx / f;
    out.g2 = kHalfOverLn2 * gy / f;
    out.h11 = kHalfOverLn2 * (gxx * f - gx * gx) / (f * f);
    out.h12 = kHalfOverLn2 * (gxy * f - gx * gy) / (f * f);
    out.h22 = kHalfOverLn2 * (gyy * f - gy * gy) / (f * f);
    return out;
}

struct SlotLocal {
    double value, gradient, curvature;
};

// Rate 0.5 log2(1 + s p) with s = b / (1 + z gamma).
SlotLocal direct_local(double p, double gain, double bs_power, double si) {
    const double s = gain / (1.0 + bs_power * si);
    const double q = 1.0 + s * p;
    return {rate_from_sinr(sinr_noncooperative(p, gain, bs_power, si)), kHalfOverLn2 * s / q,
            -kHalfOverLn2 * s * s / (q * q)};
}

CellLocal cell_local(const Link& link, std::size_t i, std::size_t j, double p1, double p2,
                     const NormalizedGains& gains, const BsPowerPolicy& bs, SinrMode mode) {
    if (link.mode == LinkMode::Cooperative) {
        // The BS power only enters through the product z * gamma.
        const double interference = bs.p_b[j] * gains.si(j);
        CellLocal out = coop_local(p1, p2, gains.user_to_relay(link.far_user, link.near_user, i),
                                   gains.relay_to_bs_slot2(link.near_user, j), interference, mode);
        out.v1 = rate_from_sinr(sinr_cooperative(
            p1, p2, bs.p_b[j], gains.user_to_relay(link.far_user, link.near_user, i),
            gains.relay_to_bs_slot2(link.near_user, j), gains.si(j), mode));
        return out;
    }
    const SlotLocal s1 = direct_local(p1, gains.relay_to_bs_slot1(link.near_user, i), bs.p_b[i], gains.si(i));
    const SlotLocal s2 = direct_local(p2, gains.relay_to_bs_slot2(link.near_user, j), bs.p_b[j], gains.si(j));
    CellLocal out;
    out.v1 = s1.value;
    out.v2 = s2.value;
    out.g1 = s1.gradient;
    out.g2 = s2.gradient;
    out.h11 = s1.curvature;
    out.h22 = s2.curvature;
    return out;
}

enum class GroupKind { Cooperative, DirectSlot1, DirectSlot2 };

// Users sharing one power budget and one minimum rate.
struct Group {
    GroupKind kind;
    std::vector<std::size_t> cells;
    std::vector<std::size_t> vars;
    double budget = 0.0;
    double rmin = 0.0;
};

struct Evaluation {
    bool interior = false;
    double objective = 0.0;  // sum-rate
    double merit = 0.0;      // objective + mu * sum(log slack)
    Eigen::VectorXd gradient;
    Eigen::MatrixXd hessian;
};

class BarrierProblem {
public:
    BarrierProblem(const Assignment& assignment, const NormalizedGains& gains, const BsPowerPolicy& bs,
                   const Budgets& budgets, SinrMode mode)
        : assignment_(assignment), gains_(gains), bs_(bs), mode_(mode) {
        const std::size_t n = assignment.n;
        var1_.assign(n, kFixed);
        var2_.assign(n, kFixed);

        std::vector<std::size_t> coop_group(assignment.k1, kFixed);
        std::vector<std::size_t> direct_group(assignment.k2, kFixed);
        for (std::size_t i = 0; i < n; ++i) {
            const Link& link = assignment.links[i];
            if (link.mode == LinkMode::Cooperative) {
                std::size_t& g = coop_group[link.far_user];
                if (g == kFixed) {
                    g = groups_.size();
                    groups_.push_back({GroupKind::Cooperative, {}, {}, budgets.pmax_coop, budgets.rmin_coop});
                }
                groups_[g].cells.push_back(i);
            } else {
                std::size_t& g = direct_group[link.near_user];
                if (g == kFixed) {
                    g = groups_.size();
                    groups_.push_back({GroupKind::DirectSlot1, {}, {}, budgets.pmax_nc, budgets.rmin_nc});
                    groups_.push_back({GroupKind::DirectSlot2, {}, {}, budgets.pmax_nc, budgets.rmin_nc});
                }
                groups_[g].cells.push_back(i);
                groups_[g + 1].cells.push_back(i);
            }
        }
        for (Group& group : groups_) {
            if (!(group.budget > 0.0)) continue;
            for (std::size_t i : group.cells) {
                if (group.kind != GroupKind::DirectSlot2) group.vars.push_back(new_var(var1_[i], group.budget));
                if (group.kind != GroupKind::DirectSlot1) group.vars.push_back(new_var(var2_[i], group.budget));
            }
        }
    }

    std::size_t num_vars() const { return scale_.size(); }
    const std::vector<Group>& groups() const { return groups_; }

    std::size_t num_constraints(bool with_qos) const {
        std::size_t m = num_vars();
        for (const Group& g : groups_) {
            if (g.vars.empty()) continue;
            ++m;
            if (with_qos && g.rmin > 0.0) ++m;
        }
        return m;
    }

    PowerProfile to_powers(const Eigen::VectorXd& u) const {
        PowerProfile p;
        p.slot1.assign(assignment_.n, 0.0);
        p.slot2.assign(assignment_.n, 0.0);
        for (std::size_t i = 0; i < assignment_.n; ++i) {
            if (var1_[i] != kFixed) p.slot1[i] = u[var1_[i]] * scale_[var1_[i]];
            if (var2_[i] != kFixed) p.slot2[i] = u[var2_[i]] * scale_[var2_[i]];
        }
        return p;
    }

    Eigen::VectorXd from_powers(const PowerProfile& p) const {
        Eigen::VectorXd u(num_vars());
        for (std::size_t i = 0; i < assignment_.n; ++i) {
            if (var1_[i] != kFixed) u[var1_[i]] = p.slot1[i] / scale_[var1_[i]];
            if (var2_[i] != kFixed) u[var2_[i]] = p.slot2[i] / scale_[var2_[i]];
        }
        return u;
    }

    std::vector<double> group_rates(const Eigen::VectorXd& u) const {
        const std::vector<CellLocal> cells = locals(u);
        std::vector<double> rates;
        for (const Group& g : groups_) {
            double r = 0.0;
            for (std::size_t i : g.cells) r += g.kind == GroupKind::DirectSlot2 ? cells[i].v2 : cells[i].v1;
            rates.push_back(r);
        }
        return rates;
    }

    /// Barrier merit and its derivatives in normalized powers u = p / budget.
    Evaluation evaluate(const Eigen::VectorXd& u, double mu, bool with_qos, bool derivatives) const {
        const std::size_t nv = num_vars();
        Evaluation e;
        for (std::size_t v = 0; v < nv; ++v) {
            if (!(u[v] > 0.0)) return e;
        }
        std::vector<double> slack(groups_.size(), 1.0);
        for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
            for (std::size_t v : groups_[gi].vars) slack[gi] -= u[v];
            if (!groups_[gi].vars.empty() && !(slack[gi] > 0.0)) return e;
        }

        const std::vector<CellLocal> cells = locals(u);
        if (derivatives) {
            e.gradient = Eigen::VectorXd::Zero(nv);
            e.hessian = Eigen::MatrixXd::Zero(nv, nv);
        }
        double barrier = 0.0;

        for (std::size_t i = 0; i < assignment_.n; ++i) {
            const CellLocal& c = cells[i];
            e.objective += c.v1 + c.v2;
            if (!derivatives) continue;
            const std::size_t a = var1_[i];
            const std::size_t b = var2_[i];
            if (a != kFixed) {
                e.gradient[a] += scale_[a] * c.g1;
                e.hessian(a, a) += scale_[a] * scale_[a] * c.h11;
            }
            if (b != kFixed) {
                e.gradient[b] += scale_[b] * c.g2;
                e.hessian(b, b) += scale_[b] * scale_[b] * c.h22;
            }
            if (a != kFixed && b != kFixed) {
                e.hessian(a, b) += scale_[a] * scale_[b] * c.h12;
                e.hessian(b, a) += scale_[a] * scale_[b] * c.h12;
            }
        }

        for (std::size_t v = 0; v < nv; ++v) {
            barrier += std::log(u[v]);
            if (derivatives) {
                e.gradient[v] += mu / u[v];
                e.hessian(v, v) -= mu / (u[v] * u[v]);
            }
        }

        for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
            const Group& g = groups_[gi];
            if (g.vars.empty()) continue;
            barrier += std::log(slack[gi]);
            if (derivatives) {
                const double d1 = mu / slack[gi];
                const double d2 = mu / (slack[gi] * slack[gi]);
                for (std::size_t v : g.vars) {
                    e.gradient[v] -= d1;
                    for (std::size_t w : g.vars) e.hessian(v, w) -= d2;
                }
            }
            if (!with_qos || !(g.rmin > 0.0)) continue;

            // Minimum rate as a concave constraint rate(u) - rmin > 0.
            double rate = 0.0;
            Eigen::VectorXd grad = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(g.vars.size()));
            Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(grad.size(), grad.size());
            std::size_t pos = 0;
            for (std::size_t i : g.cells) {
                const CellLocal& c = cells[i];
                switch (g.kind) {
                case GroupKind::Cooperative: {
                    const auto a = static_cast<Eigen::Index>(pos++);
                    const auto b = static_cast<Eigen::Index>(pos++);
                    rate += c.v1;
                    grad[a] = scale_[var1_[i]] * c.g1;
                    grad[b] = scale_[var2_[i]] * c.g2;
                    hess(a, a) = scale_[var1_[i]] * scale_[var1_[i]] * c.h11;
                    hess(b, b) = scale_[var2_[i]] * scale_[var2_[i]] * c.h22;
                    hess(a, b) = hess(b, a) = scale_[var1_[i]] * scale_[var2_[i]] * c.h12;
                    break;
                }
                case GroupKind::DirectSlot1: {
                    const auto a = static_cast<Eigen::Index>(pos++);
                    rate += c.v1;
                    grad[a] = scale_[var1_[i]] * c.g1;
                    hess(a, a) = scale_[var1_[i]] * scale_[var1_[i]] * c.h11;
                    break;
                }
                case GroupKind::DirectSlot2: {
                    const auto a = static_cast<Eigen::Index>(pos++);
                    rate += c.v2;
                    grad[a] = scale_[var2_[i]] * c.g2;
                    hess(a, a) = scale_[var2_[i]] * scale_[var2_[i]] * c.h22;
                    break;
                }
                }
            }
            const double s = rate - g.rmin;
            if (!(s > 0.0)) return Evaluation{};
            barrier += std::log(s);
            if (derivatives) {
                for (std::size_t p = 0; p < g.vars.size(); ++p) {
                    const auto ip = static_cast<Eigen::Index>(p);
                    e.gradient[g.vars[p]] += mu * grad[ip] / s;
                    for (std::size_t q = 0; q < g.vars.size(); ++q) {
                        const auto iq = static_cast<Eigen::Index>(q);
                        e.hessian(g.vars[p], g.vars[q]) +=
                            mu * (hess(ip, iq) / s - grad[ip] * grad[iq] / (s * s));
                    }
                }
            }
        }

        e.interior = true;
        e.merit = e.objective + mu * barrier;
        return e;
    }

private:
    std::size_t new_var(std::size_t& slot, double budget) {
        slot = scale_.size();
        scale_.push_back(budget);
        return slot;
    }

    std::vector<CellLocal> locals(const Eigen::VectorXd& u) const {
        const PowerProfile p = to_powers(u);
        std::vector<CellLocal> cells(assignment_.n);
        for (std::size_t i = 0; i < assignment_.n; ++i) {
            cells[i] = cell_local(assignment_.links[i], i, assignment_.pair_of[i], p.slot1[i],
                                  p.slot2[i], gains_, bs_, mode_);
        }
        return cells;
    }

    const Assignment& assignment_;
    const NormalizedGains& gains_;
    const BsPowerPolicy& bs_;
    SinrMode mode_;
    std::vector<std::size_t> var1_;
    std::vector<std::size_t> var2_;
    std::vector<double> scale_;
    std::vector<Group> groups_;
};

struct CenterResult {
    int steps = 0;
    double gradient_norm = 0.0;
};

// Damped Newton ascent on the barrier merit for fixed mu.
CenterResult center(const BarrierProblem& problem, Eigen::VectorXd& u, double mu, bool with_qos,
                    const SolverOptions& options) {
    CenterResult result;
    Evaluation current = problem.evaluate(u, mu, with_qos, true);
    const auto n = static_cast<Eigen::Index>(problem.num_vars());
    for (; result.steps < options.max_newton_per_center; ++result.steps) {
        const Eigen::MatrixXd neg_hessian = -current.hessian;
        Eigen::LLT<Eigen::MatrixXd> llt(neg_hessian);
        double shift = 0.0;
        while (llt.info() != Eigen::Success) {
            // Nonconcave merit (Exact mode): regularize toward gradient ascent.
            shift = shift == 0.0 ? 1e-10 * (1.0 + neg_hessian.diagonal().cwiseAbs().maxCoeff()) : shift * 10.0;
            llt.compute(neg_hessian + shift * Eigen::MatrixXd::Identity(n, n));
        }
        const Eigen::VectorXd step = llt.solve(current.gradient);
        const double decrement = current.gradient.dot(step);
        if (!(decrement > 1e-18 * std::max(1.0, std::abs(current.merit)))) break;

        const double roundoff = 8.0 * std::numeric_limits<double>::epsilon() * std::abs(current.merit);
        double t = 1.0;
        Evaluation trial;
        for (;;) {
            trial = problem.evaluate(u + t * step, mu, with_qos, false);
            if (trial.interior &&
                trial.merit >= current.merit + options.armijo_slope * t * decrement - roundoff) {
                break;
            }
            t *= options.backtrack_factor;
            if (t < 1e-16) break;
        }
        if (t < 1e-16) break;  // no representable progress left
        u += t * step;
        const bool improved = trial.merit > current.merit;
        current = problem.evaluate(u, mu, with_qos, true);
        if (!improved) {
            ++result.steps;
            break;  // accepted within roundoff only
        }
    }
    result.gradient_norm = current.gradient.size() == 0 ? 0.0 : current.gradient.cwiseAbs().maxCoeff();
    return result;
}

struct BarrierRun {
    int steps = 0;
    int outer = 0;
    double mu = 0.0;
    double kkt = 0.0;
    double gap = 0.0;
};

BarrierRun run_barrier(const BarrierProblem& problem, Eigen::VectorXd& u, double mu, bool with_qos,
                       double gap_target, const SolverOptions& options) {
    BarrierRun run;
    const double m = static_cast<double>(problem.num_constraints(with_qos));
    for (;;) {
        const CenterResult c = center(problem, u, mu, with_qos, options);
        run.steps += c.steps;
        ++run.outer;
        run.kkt = c.gradient_norm;
        run.mu = mu;
        run.gap = m * mu;
        if (run.gap <= gap_target || run.outer >= options.max_outer) break;
        mu *= options.mu_decrease;
    }
    return run;
}

}  // namespace

ObjectiveValue objective_and_gradient(const PowerProfile& powers, const Assignment& assignment,
                                      const NormalizedGains& gains, const BsPowerPolicy& bs,
                                      SinrMode mode) {
    const std::size_t n = assignment.n;
    ObjectiveValue out;
    out.gradient.assign(2 * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const CellLocal c = cell_local(assignment.links[i], i, assignment.pair_of[i], powers.slot1[i],
                                       powers.slot2[i], gains, bs, mode);
        out.value += c.v1 + c.v2;
        out.gradient[i] = c.g1;
        out.gradient[n + i] = c.g2;
    }
    return out;
}

Matrix2 coop_hessian_closed_form(double x, double y, double a, double b, double c) {
    const double d = b * y + a * c * x;
    if (!(d > 0.0)) throw DomainError("cooperative Hessian: b*y + a*c*x must be positive");
    const double s2 = d * d;
    const double d3 = s2 * d;
    const double s1 = a * b / d - a * b * b * y / s2 - a * a * b * c * x / s2 +
                      2.0 * a * a * b * b * c * x * y / d3;
    Matrix2 h{};
    h[0][0] = 2.0 * a * a * a * b * c * c * x * y / d3 - 2.0 * a * a * b * c * y / s2;
    h[0][1] = s1;
    h[1][0] = s1;
    h[1][1] = 2.0 * a * b * b * b * x * y / d3 - 2.0 * a * b * b * x / s2;
    return h;
}

std::array<double, 2> coop_hessian_eigenvalues(double x, double y, double a, double b, double c) {
    const double numerator = 2.0 * c * a * a * b * b * x * x + 2.0 * c * a * a * b * b * y * y;
    const double denominator = a * a * a * c * c * c * x * x * x + 3.0 * a * a * b * c * c * x * x * y +
                               3.0 * a * b * b * c * x * y * y + b * b * b * y * y * y;
    if (!(denominator > 0.0)) throw DomainError("cooperative eigenvalues: degenerate denominator");
    return {0.0, -numerator / denominator};
}

NcCurvature nc_hessian_and_eigenvalues(double x, double b, double c, double z) {
    const double czp1 = c * z + 1.0;
    if (!(czp1 > 0.0)) throw DomainError("direct-link curvature: c*z + 1 must be positive");
    NcCurvature out;
    const double q = b * x / czp1 + 1.0;
    out.hessian = -(b * b) / (std::numbers::ln2 * q * q * czp1 * czp1);
    const double r = b * x + c * z + 1.0;
    out.eigenvalues = {0.0, -(b * b) / (std::numbers::ln2 * r * r)};
    return out;
}

PowerProfile equal_power_baseline(const Assignment& assignment, const Budgets& budgets) {
    PowerProfile p;
    p.slot1.assign(assignment.n, 0.0);
    p.slot2.assign(assignment.n, 0.0);
    for (std::size_t i = 0; i < assignment.n; ++i) {
        const Link& link = assignment.links[i];
        const auto share = static_cast<double>(assignment.cells_owned_by(link));
        if (link.mode == LinkMode::Cooperative) {
            p.slot1[i] = p.slot2[i] = std::max(budgets.pmax_coop, 0.0) / (2.0 * share);
        } else {
            p.slot1[i] = p.slot2[i] = std::max(budgets.pmax_nc, 0.0) / share;
        }
    }
    return p;
}

PowerProfile provisional_profile(const Assignment& assignment, const ProvisionalPowers& powers) {
    PowerProfile p;
    p.slot1.resize(assignment.n);
    p.slot2.resize(assignment.n);
    for (std::size_t i = 0; i < assignment.n; ++i) {
        const bool coop = assignment.links[i].mode == LinkMode::Cooperative;
        p.slot1[i] = coop ? powers.user : powers.near_user;
        p.slot2[i] = coop ? powers.relay : powers.near_user;
    }
    return p;
}

ConstraintCheck check_constraints(const Assignment& assignment, const PowerProfile& powers,
                                  const NormalizedGains& gains, const BsPowerPolicy& bs,
                                  const Budgets& budgets, SinrMode mode) {
    ConstraintCheck out;
    const std::size_t n = assignment.n;
    for (std::size_t i = 0; i < n; ++i) {
        out.min_power = std::min({out.min_power, powers.slot1[i], powers.slot2[i]});
    }

    const auto excess = [](double used, double cap) {
        if (cap > 0.0) return (used - cap) / cap;
        return used > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    };
    std::vector<double> coop_power(assignment.k1, 0.0), coop_rate(assignment.k1, 0.0);
    std::vector<double> nc_power1(assignment.k2, 0.0), nc_power2(assignment.k2, 0.0);
    std::vector<double> nc_rate1(assignment.k2, 0.0), nc_rate2(assignment.k2, 0.0);
    std::vector<int> coop_cells(assignment.k1, 0), nc_cells(assignment.k2, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Link& link = assignment.links[i];
        const CellLocal c = cell_local(link, i, assignment.pair_of[i], powers.slot1[i], powers.slot2[i],
                                       gains, bs, mode);
        if (link.mode == LinkMode::Cooperative) {
            coop_power[link.far_user] += powers.slot1[i] + powers.slot2[i];
            coop_rate[link.far_user] += c.v1;
            ++coop_cells[link.far_user];
        } else {
            nc_power1[link.near_user] += powers.slot1[i];
            nc_power2[link.near_user] += powers.slot2[i];
            nc_rate1[link.near_user] += c.v1;
            nc_rate2[link.near_user] += c.v2;
            ++nc_cells[link.near_user];
        }
    }
    for (std::size_t k = 0; k < assignment.k1; ++k) {
        out.max_budget_excess = std::max(out.max_budget_excess, excess(coop_power[k], budgets.pmax_coop));
        if (budgets.rmin_coop > 0.0) {
            out.max_qos_shortfall = std::max(out.max_qos_shortfall, budgets.rmin_coop - coop_rate[k]);
            out.qos_satisfiable = out.qos_satisfiable && coop_cells[k] > 0;
        }
    }
    for (std::size_t m = 0; m < assignment.k2; ++m) {
        out.max_budget_excess = std::max({out.max_budget_excess, excess(nc_power1[m], budgets.pmax_nc),
                                          excess(nc_power2[m], budgets.pmax_nc)});
        const bool relay = m < assignment.is_relay.size() && assignment.is_relay[m];
        if (budgets.rmin_nc > 0.0 && !relay) {
            out.max_qos_shortfall = std::max({out.max_qos_shortfall, budgets.rmin_nc - nc_rate1[m],
                                              budgets.rmin_nc - nc_rate2[m]});
            out.qos_satisfiable = out.qos_satisfiable && nc_cells[m] > 0;
        }
    }
    return out;
}

PowerSolution solve(const Assignment& assignment, const NormalizedGains& gains,
                    const BsPowerPolicy& bs, const Budgets& budgets, SinrMode mode,
                    const SolverOptions& options) {
    if (budgets.pmax_coop < 0.0 || budgets.pmax_nc < 0.0 || budgets.rmin_coop < 0.0 ||
        budgets.rmin_nc < 0.0) {
        throw std::invalid_argument("solve: budgets must be non-negative");
    }
    const std::size_t coop_cells = assignment.cooperative_cells();
    const std::size_t direct_cells = assignment.n - coop_cells;
    if ((!(budgets.pmax_coop > 0.0) && budgets.rmin_coop > 0.0 && (coop_cells > 0 || assignment.k1 > 0)) ||
        (!(budgets.pmax_nc > 0.0) && budgets.rmin_nc > 0.0 && direct_cells > 0)) {
        throw InfeasibleError("zero power budget with a positive minimum rate");
    }

    const BarrierProblem problem(assignment, gains, bs, budgets, mode);
    PowerSolution out;
    SolverReport& report = out.report;

    // Minimum rates only bind when some user cannot reach them at all: every
    // group has its own budget, so the sum-rate optimum also maximizes each
    // group's rate. Phase one therefore ignores them and doubles as the
    // feasibility test; phase two re-centers with them enforced.
    PowerProfile start = equal_power_baseline(assignment, budgets);
    Eigen::VectorXd u = problem.from_powers(start) * options.interior_shrink;
    const double f_start = problem.evaluate(u, 0.0, false, false).objective;
    const double gap_target = options.gap_tolerance * std::min(1.0, f_start);

    if (problem.num_vars() > 0 && f_start > 0.0) {
        BarrierRun run = run_barrier(problem, u, options.mu_initial, false, gap_target, options);
        report.iterations = run.steps;
        report.outer_iterations = run.outer;
        report.kkt_residual = run.kkt;
        report.duality_gap = run.gap;

        const std::vector<double> rates = problem.group_rates(u);
        bool attainable = true;
        for (std::size_t g = 0; g < problem.groups().size(); ++g) {
            const double rmin = problem.groups()[g].rmin;
            if (rmin > 0.0 && !(rates[g] > rmin)) attainable = false;
        }
        const ConstraintCheck reach = check_constraints(assignment, start, gains, bs, budgets, mode);
        attainable = attainable && reach.qos_satisfiable;

        if (attainable) {
            const BarrierRun second = run_barrier(problem, u, run.mu, true, gap_target, options);
            report.iterations += second.steps;
            report.outer_iterations += second.outer;
            report.kkt_residual = second.kkt;
            report.duality_gap = second.gap;
        } else {
            report.qos_relaxed = true;
        }

        // Rates never decrease in any power, so filling every budget exactly is
        // a free improvement over the barrier point.
        for (const Group& g : problem.groups()) {
            double used = 0.0;
            for (std::size_t v : g.vars) used += u[v];
            if (used > 0.0) {
                for (std::size_t v : g.vars) u[v] /= used;
            }
        }
        out.powers = problem.to_powers(u);
    } else {
        out.powers = std::move(start);
        const ConstraintCheck reach = check_constraints(assignment, out.powers, gains, bs, budgets, mode);
        report.qos_relaxed = reach.max_qos_shortfall > 0.0 || !reach.qos_satisfiable;
    }

    report.objective = total_sum_rate(assignment, out.powers, gains, bs, mode);
    const ConstraintCheck check = check_constraints(assignment, out.powers, gains, bs, budgets, mode);
    report.feasible = check.min_power >= 0.0 && check.max_budget_excess <= 1e-8 &&
                      (report.qos_relaxed || check.max_qos_shortfall <= 1e-6);
    return out;
}

}  // namespace fdxsim
