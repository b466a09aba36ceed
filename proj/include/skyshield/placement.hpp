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

#pragma once

#include "skyshield/channel.hpp"
#include "skyshield/config.hpp"
#include "skyshield/geometry.hpp"
#include "skyshield/kernels.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace skyshield {

struct GridOptimum {
    double x_star = 0.0;
    double value = 0.0;
};

// Must be safe to call concurrently.
using Objective1d = std::function<double(double)>;

// Best grid point; ties go to the smallest x. Throws EmptyGrid for an
// invalid grid and std::domain_error if the objective is not finite.
GridOptimum grid_argmax_1d(const Objective1d& objective, const SearchGrid& grid, kernels::Parallelism par = {});

// Single-threaded reference for grid_argmax_1d.
GridOptimum grid_argmax_1d_serial(const Objective1d& objective, const SearchGrid& grid);

// Deterministic secrecy rate of the UAV-assisted jamming setup as a function
// of the UAV-BS abscissa x. The UAV-BS flies at (x, 0, H), the ground user
// is at cfg.user, the ground eavesdropper at (eve_x, 0, 0) and, when
// with_jammer is set, a UAV-jammer hovers at (eve_x, 0, H) and interferes at
// both receivers. All links are free space.
struct ExpAObjective {
    Position user;
    Position eve;
    Position jammer;
    double uav_altitude = 200.0;
    FreeSpaceLoS los{};
    double p_u_w = 0.0;
    double p_j_w = 0.0;
    bool with_jammer = false;
    bool eavesdropper_present = true; // false forces the wiretap gain to 0

    ExpAObjective(const ExpAConfig& cfg, double p_u_watts, bool jammer);

    double operator()(double x) const;
    double user_sinr(double x) const;
    double eve_sinr(double x) const;
};

// 1D search over cfg.search at fixed altitude.
GridOptimum optimize_uav_bs(const ExpAConfig& cfg, double p_u_watts, bool with_jammer,
                            kernels::Parallelism par = {});

struct JammerRankingChannels {
    FreeSpaceLoS air{};
    TerrestrialFading ground{};
    BsAntennaPattern pattern{};
    bool pattern_enabled = true;
};

// Jam-to-leak ratio of one candidate BS: free-space gain towards the UAV
// (through the BS pattern) over the unfaded terrestrial gain to the
// protected cell center.
double jam_to_leak_ratio(const Position& candidate, const Position& uav, const Position& protected_cell_center,
                         const JammerRankingChannels& ch);

// Candidate indices in descending jam-to-leak order; ties by index.
std::vector<std::size_t> rank_jammer_bs(std::span<const Position> candidates, const Position& uav,
                                        const Position& protected_cell_center, const JammerRankingChannels& ch);

} // namespace skyshield
