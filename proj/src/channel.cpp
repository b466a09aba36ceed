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

#include "skyshield/channel.hpp"

#include "skyshield/error.hpp"

#include <algorithm>
#include <cmath>

namespace skyshield {

double dbm_to_watts(double dbm) noexcept { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

double linear_to_db(double x)
{
    if (!(x > 0.0))
        throw NonPositiveLinear("cannot take dB of " + std::to_string(x));
    return 10.0 * std::log10(x);
}

FreeSpaceLoS::FreeSpaceLoS(double g0) : gamma0(g0)
{
    if (!(gamma0 > 0.0) || !std::isfinite(gamma0))
        throw ConfigError("gamma0", "must be finite and > 0");
}

TerrestrialFading::TerrestrialFading(double g0, double exponent) : gamma0(g0), alpha(exponent)
{
    if (!(gamma0 > 0.0) || !std::isfinite(gamma0))
        throw ConfigError("gamma0", "must be finite and > 0");
    if (!(alpha >= 2.0) || !std::isfinite(alpha))
        throw ConfigError("alpha", "path-loss exponent must be >= 2");
}

BsAntennaPattern::BsAntennaPattern(double downtilt, double theta3db, double max_attenuation)
    : downtilt_deg(downtilt), theta3db_deg(theta3db), max_attenuation_db(max_attenuation)
{
    if (!std::isfinite(downtilt_deg) || downtilt_deg < -90.0 || downtilt_deg > 90.0)
        throw ConfigError("pattern.downtilt_deg", "must lie in [-90, 90]");
    if (!(theta3db_deg > 0.0) || !std::isfinite(theta3db_deg))
        throw ConfigError("pattern.theta3db_deg", "must be > 0");
    if (!(max_attenuation_db >= 0.0) || !std::isfinite(max_attenuation_db))
        throw ConfigError("pattern.max_attenuation_db", "must be >= 0");
}

double los_gain(const FreeSpaceLoS& model, double d)
{
    if (!(d >= 1.0))
        throw BelowReferenceDistance("free-space model needs d >= 1 m, got " + std::to_string(d));
    return model.gamma0 / (d * d);
}

double terrestrial_gain(const TerrestrialFading& model, double d, double fade)
{
    if (!(d >= 1.0))
        throw BelowReferenceDistance("terrestrial model needs d >= 1 m, got " + std::to_string(d));
    if (!(fade > 0.0))
        throw NonPositiveFade("fade must be > 0, got " + std::to_string(fade));
    // alpha == 2 uses the same expression as los_gain so the two agree bit for bit.
    const double loss = model.alpha == 2.0 ? d * d : std::pow(d, model.alpha);
    return model.gamma0 / loss * fade;
}

double sample_fade(RngStream& rng)
{
    std::exponential_distribution<double> fade(1.0);
    double x = fade(rng);
    // libstdc++ can return exactly 0 with probability 2^-53; redraw.
    while (!(x > 0.0))
        x = fade(rng);
    return x;
}

double pattern_gain_db(const BsAntennaPattern& pattern, double elevation_of_target_deg) noexcept
{
    const double off_boresight = (elevation_of_target_deg + pattern.downtilt_deg) / pattern.theta3db_deg;
    return -std::min(12.0 * off_boresight * off_boresight, pattern.max_attenuation_db);
}

double pattern_gain(const BsAntennaPattern& pattern, double elevation_of_target_deg) noexcept
{
    return db_to_linear(pattern_gain_db(pattern, elevation_of_target_deg));
}

} // namespace skyshield
