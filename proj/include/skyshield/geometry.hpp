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

#include <numbers>

namespace skyshield {

// 3D point in meters. z is altitude above the ground plane z = 0.
struct Position {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const Position&, const Position&) = default;
};

// Validation bounds for node altitudes; configurable per scenario.
struct AltitudeBounds {
    double ground_max = 100.0;
    double aerial_max = 10000.0;
};

bool is_finite(const Position& p) noexcept;

// Throw InvalidPosition unless p is finite with z in [0, ground_max].
void require_ground(const Position& p, const AltitudeBounds& bounds = {});
// Throw InvalidPosition unless p is finite with z in (0, aerial_max].
void require_aerial(const Position& p, const AltitudeBounds& bounds = {});

double distance(const Position& a, const Position& b) noexcept;
double horizontal_distance(const Position& a, const Position& b) noexcept;

// Degrees in [-90, 90], positive when target is above the observer's
// horizontal plane. Throws CoincidentNodes when observer == target.
double elevation_angle(const Position& observer, const Position& target);

// Degrees in [0, 360) counterclockwise from +x. Throws VerticalLink when the
// xy-projections coincide.
double azimuth_angle(const Position& observer, const Position& target);

constexpr double deg_to_rad(double deg) noexcept { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) noexcept { return rad * 180.0 / std::numbers::pi; }

} // namespace skyshield
