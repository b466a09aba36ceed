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

#include "skyshield/rng.hpp"

namespace skyshield {

// All gains in this header are noise-normalized and per watt of transmit
// power: SNR = P_watts * gain.

double dbm_to_watts(double dbm) noexcept;
double db_to_linear(double db) noexcept;
// Throws NonPositiveLinear for x <= 0.
double linear_to_db(double x);

// Free-space line-of-sight link. Used for every air-ground link.
struct FreeSpaceLoS {
    double gamma0 = 1e8; // gain at 1 m, 1/W (80 dB reference SNR per watt)

    FreeSpaceLoS() = default;
    explicit FreeSpaceLoS(double g0);
};

// Log-distance path loss with a unit-mean exponential power fade.
struct TerrestrialFading {
    double gamma0 = 1e8;
    double alpha = 3.76;

    TerrestrialFading() = default;
    TerrestrialFading(double g0, double exponent);
};

// Vertical BS element pattern, parabolic in elevation with a floor.
struct BsAntennaPattern {
    double downtilt_deg = 10.0;
    double theta3db_deg = 10.0;
    double max_attenuation_db = 20.0;

    BsAntennaPattern() = default;
    BsAntennaPattern(double downtilt, double theta3db, double max_attenuation);
};

// gamma0 / d^2. Throws BelowReferenceDistance for d < 1.
double los_gain(const FreeSpaceLoS& model, double d);

// gamma0 / d^alpha * fade. Throws BelowReferenceDistance, NonPositiveFade.
double terrestrial_gain(const TerrestrialFading& model, double d, double fade);

// Exp(1) draw; the power of a unit-mean Rayleigh amplitude.
double sample_fade(RngStream& rng);

// Pattern gain in dB for a target at the given elevation seen from the BS.
double pattern_gain_db(const BsAntennaPattern& pattern, double elevation_of_target_deg) noexcept;
// Linear form of pattern_gain_db, in (0, 1].
double pattern_gain(const BsAntennaPattern& pattern, double elevation_of_target_deg) noexcept;

} // namespace skyshield
