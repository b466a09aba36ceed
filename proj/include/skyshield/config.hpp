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

// Experiment configurations. Defaults reproduce the reference setups so the
// experiments run with no config file at all.

#include "skyshield/beamforming.hpp"
#include "skyshield/channel.hpp"
#include "skyshield/geometry.hpp"
#include "skyshield/secrecy.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace skyshield {

inline constexpr int kSchemaVersion = 1;

// Grid points lo, lo + step, ... up to hi; the last point is clamped to hi.
struct SearchGrid {
    double lo = -500.0;
    double hi = 500.0;
    double step = 0.5;

    // Throws EmptyGrid for lo > hi, step <= 0 or non-finite bounds.
    std::vector<double> points() const;
};

enum class ExpAScheme { OptimizedWithJammer, OptimizedNoJammer, FixedAboveUser };

std::string to_string(ExpAScheme s);
ExpAScheme exp_a_scheme_from_string(const std::string& s);

struct ExpAConfig {
    Position user{0.0, 0.0, 0.0};
    double eve_x = 400.0;           // eavesdropper on the ground at (eve_x, 0, 0)
    double uav_altitude = 200.0;    // UAV-BS and UAV-jammer altitude
    double gamma0 = 1e8;            // 1/W
    double p_j_dbm = 5.0;           // -inf switches the jammer off
    std::vector<double> p_u_sweep_dbm = default_p_u_sweep();
    SearchGrid search{};
    std::vector<ExpAScheme> schemes{ExpAScheme::OptimizedWithJammer, ExpAScheme::OptimizedNoJammer,
                                    ExpAScheme::FixedAboveUser};

    static std::vector<double> default_p_u_sweep();
};

enum class FadingLaw { Rayleigh, None };

struct ExpBConfig {
    double cell_radius = 800.0;
    int rings = 2;
    double isd = 1600.0;
    double bs_height = 25.0;
    double uav_horizontal_offset = 1000.0;
    double uav_azimuth_deg = 0.0;
    double uav_altitude = 200.0;
    bool uav_track_user = false; // diagnostic: eavesdropper sits on the user drop
    BsAntennaPattern pattern{};
    bool pattern_enabled = true;
    double gamma0_air = 1e8;
    double gamma0_terrestrial = 1e8;
    double alpha = 3.76;
    FadingLaw fading = FadingLaw::Rayleigh;
    std::vector<double> p_t_sweep_dbm{35.0, 40.0, 45.0};
    std::vector<int> n_jammers_sweep = default_n_jammers_sweep();
    std::uint64_t trials = 10000;
    std::uint64_t seed = 42;
    SecrecyAveraging averaging = SecrecyAveraging::PerRealization;

    static std::vector<int> default_n_jammers_sweep();
    Position serving_bs() const { return {0.0, 0.0, bs_height}; }
    Position uav() const;
};

struct BeamDemoConfig {
    UpaGeometry array{4, 4, 0.5};
    std::vector<double> tx_altitudes{0.0, 10.0, 25.0, 50.0, 100.0, 200.0, 400.0};
    Position user{100.0, 0.0, 0.0};
    Position eve{300.0, 0.0, 0.0};
    double gamma0 = 1e8;
    double p_tx_dbm = 20.0;
};

// Each throws ConfigError naming the first violated field.
void validate(const ExpAConfig& cfg);
void validate(const ExpBConfig& cfg);
void validate(const BeamDemoConfig& cfg);

} // namespace skyshield
