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

#include "skyshield/config.hpp"
#include "skyshield/kernels.hpp"
#include "skyshield/placement.hpp"
#include "skyshield/rng.hpp"
#include "skyshield/secrecy.hpp"
#include "skyshield/sweep_table.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace skyshield {

// Hexagonal lattice of 1 + 3 rings (rings + 1) sites. Site 0 is the origin;
// the rest follow ring by ring, counterclockwise from azimuth 0.
std::vector<Position> hex_layout(int rings, double isd, double height = 0.0);

// Uniform over the disk of the given radius around center, at z = 0.
Position drop_user(RngStream& rng, const Position& center, double radius);

// ---------------------------------------------------------------------------
// Experiment A: UAV-BS placement with an optional UAV-jammer.

SweepTable run_exp_a(const ExpAConfig& cfg, kernels::Parallelism par = {});

// ---------------------------------------------------------------------------
// Experiment B: cooperative remote jamming by terrestrial BSs.

// Per-trial randomness: one user drop and one fade per site, shared by every
// (p_t, n_jam) sweep point.
struct ExpBDraw {
    Position user;
    double serving_to_user = 0.0;            // gain, per watt
    std::vector<double> jammers_to_user;      // in rank order
    double serving_to_eve = 0.0;
    std::vector<double> jammers_to_eve;       // in rank order
};

class ExpBModel {
public:
    explicit ExpBModel(const ExpBConfig& cfg);

    const ExpBConfig& config() const noexcept { return cfg_; }
    const std::vector<Position>& sites() const noexcept { return sites_; }
    // Site indices of candidate jammers, best first.
    const std::vector<std::size_t>& jammer_order() const noexcept { return jammer_order_; }
    Position uav() const noexcept { return uav_; }

    // Sweep points are p_t-major: point = p_index * n_jammers_sweep.size() + n_index.
    std::size_t points() const noexcept;

    ExpBDraw draw(RngStream& rng) const;
    RatePair rates(const ExpBDraw& d, double p_t_watts, int n_jammers) const;

    // Writes the (legit, eve) rate pair of every sweep point for trial t:
    // out[2 * point] and out[2 * point + 1].
    void trial(std::uint64_t t, double* out) const;

private:
    ExpBConfig cfg_;
    std::vector<Position> sites_;
    std::vector<std::size_t> jammer_order_;
    Position uav_;
    std::vector<double> p_t_watts_;
    TerrestrialFading ground_;
    FreeSpaceLoS air_;
    double fixed_serving_to_eve_ = 0.0;
    std::vector<double> fixed_jammers_to_eve_;

    double bs_gain(const Position& bs, const Position& target, bool terrestrial, double fade) const;
};

// trials x (2 * points) row-major matrix of rate pairs.
std::vector<double> exp_b_trial_matrix(const ExpBModel& model, kernels::Parallelism par = {});
std::vector<double> exp_b_trial_matrix_serial(const ExpBModel& model);

// One SecrecyStat per sweep point, p_t-major.
std::vector<SecrecyStat> exp_b_stats(const ExpBModel& model, std::span<const double> trial_matrix);

SweepTable run_exp_b(const ExpBConfig& cfg, kernels::Parallelism par = {});

// ---------------------------------------------------------------------------
// Beam-nulling demo: a UPA transmitter at the origin at several altitudes,
// serving a ground user with a ground eavesdropper present.

SweepTable run_beam_demo(const BeamDemoConfig& cfg);

} // namespace skyshield
