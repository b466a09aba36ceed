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

#include "skyshield/config.hpp"

#include "skyshield/error.hpp"

#include <cmath>
#include <numeric>

namespace skyshield {

namespace {

void require(bool ok, const char* field, const std::string& message)
{
    if (!ok)
        throw ConfigError(field, message);
}

bool finite(double v) { return std::isfinite(v); }

// Constructing the model types runs their own invariant checks.
void check_pattern(const BsAntennaPattern& p)
{
    BsAntennaPattern checked(p.downtilt_deg, p.theta3db_deg, p.max_attenuation_db);
    (void)checked;
}

} // namespace

std::vector<double> SearchGrid::points() const
{
    if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step))
        throw EmptyGrid("grid bounds must be finite");
    if (lo > hi)
        throw EmptyGrid("lo > hi");
    if (!(step > 0.0))
        throw EmptyGrid("step must be > 0");

    const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
    std::vector<double> pts;
    pts.reserve(n + 2);
    for (std::size_t i = 0; i <= n; ++i)
        pts.push_back(std::min(lo + static_cast<double>(i) * step, hi));
    if (pts.back() < hi)
        pts.push_back(hi);
    return pts;
}

std::string to_string(ExpAScheme s)
{
    switch (s) {
    case ExpAScheme::OptimizedWithJammer:
        return "optimized_with_jammer";
    case ExpAScheme::OptimizedNoJammer:
        return "optimized_no_jammer";
    case ExpAScheme::FixedAboveUser:
        return "fixed_above_user";
    }
    return "unknown";
}

ExpAScheme exp_a_scheme_from_string(const std::string& s)
{
    for (auto scheme : {ExpAScheme::OptimizedWithJammer, ExpAScheme::OptimizedNoJammer, ExpAScheme::FixedAboveUser})
        if (to_string(scheme) == s)
            return scheme;
    throw ConfigError("schemes", "unknown scheme '" + s + "'");
}

std::vector<double> ExpAConfig::default_p_u_sweep()
{
    std::vector<double> v(31);
    std::iota(v.begin(), v.end(), 0.0);
    return v;
}

std::vector<int> ExpBConfig::default_n_jammers_sweep()
{
    std::vector<int> v(19);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

Position ExpBConfig::uav() const
{
    const double az = deg_to_rad(uav_azimuth_deg);
    return {uav_horizontal_offset * std::cos(az), uav_horizontal_offset * std::sin(az), uav_altitude};
}

void validate(const ExpAConfig& cfg)
{
    require(is_finite(cfg.user) && cfg.user.z >= 0.0 && cfg.user.z <= AltitudeBounds{}.ground_max, "user",
            "must be a finite ground position with z in [0, 100]");
    require(finite(cfg.eve_x), "eve_x", "must be finite");
    require(finite(cfg.uav_altitude) && cfg.uav_altitude > 0.0 && cfg.uav_altitude <= AltitudeBounds{}.aerial_max,
            "uav_altitude", "must be in (0, 10000]");
    require(finite(cfg.gamma0) && cfg.gamma0 > 0.0, "gamma0", "must be finite and > 0");
    require(!std::isnan(cfg.p_j_dbm) && cfg.p_j_dbm != INFINITY, "p_j_dbm", "must be finite or -inf");
    require(!cfg.p_u_sweep_dbm.empty(), "p_u_sweep_dbm", "sweep must be nonempty");
    for (double p : cfg.p_u_sweep_dbm)
        require(finite(p), "p_u_sweep_dbm", "every power must be finite");
    require(!cfg.schemes.empty(), "schemes", "at least one scheme is required");
    try {
        (void)cfg.search.points();
    } catch (const EmptyGrid& e) {
        throw ConfigError("search", e.what());
    }
}

void validate(const ExpBConfig& cfg)
{
    require(finite(cfg.cell_radius) && cfg.cell_radius > 0.0, "cell_radius", "must be > 0");
    require(cfg.rings >= 0 && cfg.rings <= 20, "rings", "must be in [0, 20]");
    require(finite(cfg.isd) && cfg.isd > 0.0, "isd", "must be > 0");
    require(finite(cfg.bs_height) && cfg.bs_height >= 0.0 && cfg.bs_height <= AltitudeBounds{}.ground_max,
            "bs_height", "must be in [0, 100]");
    require(finite(cfg.uav_horizontal_offset) && cfg.uav_horizontal_offset > 0.0, "uav.horizontal_offset",
            "must be > 0");
    require(finite(cfg.uav_azimuth_deg), "uav.azimuth_deg", "must be finite");
    require(finite(cfg.uav_altitude) && cfg.uav_altitude > 0.0 && cfg.uav_altitude <= AltitudeBounds{}.aerial_max,
            "uav.altitude", "must be in (0, 10000]");
    check_pattern(cfg.pattern);
    require(finite(cfg.gamma0_air) && cfg.gamma0_air > 0.0, "gamma0_air", "must be finite and > 0");
    require(finite(cfg.gamma0_terrestrial) && cfg.gamma0_terrestrial > 0.0, "gamma0_terrestrial",
            "must be finite and > 0");
    require(finite(cfg.alpha) && cfg.alpha >= 2.0, "alpha", "path-loss exponent must be >= 2");
    require(!cfg.p_t_sweep_dbm.empty(), "p_t_sweep_dbm", "sweep must be nonempty");
    for (double p : cfg.p_t_sweep_dbm)
        require(finite(p), "p_t_sweep_dbm", "every power must be finite");
    require(!cfg.n_jammers_sweep.empty(), "n_jammers_sweep", "sweep must be nonempty");
    const int sites = 1 + 3 * cfg.rings * (cfg.rings + 1);
    for (int n : cfg.n_jammers_sweep)
        require(n >= 0 && n < sites, "n_jammers_sweep",
                "each count must be in [0, " + std::to_string(sites - 1) + "] for " + std::to_string(cfg.rings) +
                    " rings");
    require(cfg.trials >= 1, "trials", "must be >= 1");
}

void validate(const BeamDemoConfig& cfg)
{
    UpaGeometry checked(cfg.array.nx, cfg.array.ny, cfg.array.spacing);
    (void)checked;
    require(!cfg.tx_altitudes.empty(), "tx_altitudes", "must be nonempty");
    for (double h : cfg.tx_altitudes)
        require(finite(h) && h >= 0.0 && h <= AltitudeBounds{}.aerial_max, "tx_altitudes",
                "every altitude must be in [0, 10000]");
    require(is_finite(cfg.user) && cfg.user.z >= 0.0 && cfg.user.z <= AltitudeBounds{}.ground_max, "user",
            "must be a finite ground position with z in [0, 100]");
    require(is_finite(cfg.eve) && cfg.eve.z >= 0.0 && cfg.eve.z <= AltitudeBounds{}.ground_max, "eve",
            "must be a finite ground position with z in [0, 100]");
    require(!(cfg.user.x == 0.0 && cfg.user.y == 0.0), "user",
            "must not sit under the transmitter (azimuth undefined)");
    require(!(cfg.eve.x == 0.0 && cfg.eve.y == 0.0), "eve", "must not sit under the transmitter (azimuth undefined)");
    require(finite(cfg.gamma0) && cfg.gamma0 > 0.0, "gamma0", "must be finite and > 0");
    require(finite(cfg.p_tx_dbm), "p_tx_dbm", "must be finite");
}

} // namespace skyshield
