// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "skyshield/placement.hpp"

#include "skyshield/secrecy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace skyshield {

namespace {

GridOptimum pick_best(const std::vector<double>& xs, const std::vector<double>& values)
{
    GridOptimum best{xs.front(), values.front()};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!std::isfinite(values[i]))
            throw std::domain_error("objective is not finite at x = " + std::to_string(xs[i]));
        // Points ascend, so strict > keeps the smallest x among ties.
        if (values[i] > best.value || i == 0)
            best = {xs[i], values[i]};
    }
    return best;
}

} // namespace

GridOptimum grid_argmax_1d(const Objective1d& objective, const SearchGrid& grid, kernels::Parallelism par)
{
    const auto xs = grid.points();
    const auto values = kernels::omp::fill<double>(xs.size(), [&](std::size_t i) { return objective(xs[i]); }, par);
    return pick_best(xs, values);
}

GridOptimum grid_argmax_1d_serial(const Objective1d& objective, const SearchGrid& grid)
{
    const auto xs = grid.points();
    const auto values = kernels::serial::fill<double>(xs.size(), [&](std::size_t i) { return objective(xs[i]); });
    return pick_best(xs, values);
}

ExpAObjective::ExpAObjective(const ExpAConfig& cfg, double p_u_watts, bool jammer)
    : user(cfg.user),
      eve{cfg.eve_x, 0.0, 0.0},
      jammer{cfg.eve_x, 0.0, cfg.uav_altitude},
      uav_altitude(cfg.uav_altitude),
      los(cfg.gamma0),
      p_u_w(p_u_watts),
      p_j_w(jammer ? dbm_to_watts(cfg.p_j_dbm) : 0.0),
      with_jammer(jammer)
{
}

double ExpAObjective::user_sinr(double x) const
{
    const Position uav{x, 0.0, uav_altitude};
    LinkBudget b{{p_u_w, los_gain(los, distance(uav, user))}, {}};
    if (with_jammer)
        b.interferers.push_back({p_j_w, los_gain(los, distance(jammer, user))});
    return sinr(b);
}

double ExpAObjective::eve_sinr(double x) const
{
    if (!eavesdropper_present)
        return 0.0;
    const Position uav{x, 0.0, uav_altitude};
    LinkBudget b{{p_u_w, los_gain(los, distance(uav, eve))}, {}};
    if (with_jammer)
        b.interferers.push_back({p_j_w, los_gain(los, distance(jammer, eve))});
    return sinr(b);
}

double ExpAObjective::operator()(double x) const { return secrecy_rate(rate(user_sinr(x)), rate(eve_sinr(x))); }

GridOptimum optimize_uav_bs(const ExpAConfig& cfg, double p_u_watts, bool with_jammer, kernels::Parallelism par)
{
    const ExpAObjective objective(cfg, p_u_watts, with_jammer);
    return grid_argmax_1d(std::cref(objective), cfg.search, par);
}

double jam_to_leak_ratio(const Position& candidate, const Position& uav, const Position& protected_cell_center,
                         const JammerRankingChannels& ch)
{
    double jam = los_gain(ch.air, distance(candidate, uav));
    if (ch.pattern_enabled)
        jam *= pattern_gain(ch.pattern, elevation_angle(candidate, uav));
    const double leak = terrestrial_gain(ch.ground, distance(candidate, protected_cell_center), 1.0);
    return jam / leak;
}

std::vector<std::size_t> rank_jammer_bs(std::span<const Position> candidates, const Position& uav,
                                        const Position& protected_cell_center, const JammerRankingChannels& ch)
{
    std::vector<double> ratio(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i)
        ratio[i] = jam_to_leak_ratio(candidates[i], uav, protected_cell_center, ch);

    std::vector<std::size_t> order(candidates.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ratio[a] > ratio[b]; });
    return order;
}

} // namespace skyshield
