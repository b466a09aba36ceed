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

#include "skyshield/geometry.hpp"

#include "skyshield/error.hpp"

#include <cmath>
#include <sstream>

namespace skyshield {

namespace {

std::string describe(const Position& p)
{
    std::ostringstream os;
    os << "(" << p.x << ", " << p.y << ", " << p.z << ")";
    return os.str();
}

} // namespace

bool is_finite(const Position& p) noexcept
{
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

void require_ground(const Position& p, const AltitudeBounds& bounds)
{
    if (!is_finite(p) || p.z < 0.0 || p.z > bounds.ground_max)
        throw InvalidPosition("ground node " + describe(p) + " needs finite coordinates and z in [0, " +
                              std::to_string(bounds.ground_max) + "]");
}

void require_aerial(const Position& p, const AltitudeBounds& bounds)
{
    if (!is_finite(p) || p.z <= 0.0 || p.z > bounds.aerial_max)
        throw InvalidPosition("aerial node " + describe(p) + " needs finite coordinates and z in (0, " +
                              std::to_string(bounds.aerial_max) + "]");
}

double distance(const Position& a, const Position& b) noexcept
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double horizontal_distance(const Position& a, const Position& b) noexcept
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

double elevation_angle(const Position& observer, const Position& target)
{
    if (observer == target)
        throw CoincidentNodes("elevation undefined at " + describe(observer));
    return rad_to_deg(std::atan2(target.z - observer.z, horizontal_distance(observer, target)));
}

double azimuth_angle(const Position& observer, const Position& target)
{
    const double dx = target.x - observer.x;
    const double dy = target.y - observer.y;
    if (dx == 0.0 && dy == 0.0)
        throw VerticalLink("azimuth undefined between " + describe(observer) + " and " + describe(target));
    double az = rad_to_deg(std::atan2(dy, dx));
    if (az < 0.0)
        az += 360.0;
    // atan2 can return -0 or a tiny negative that rounds to 360 after the shift.
    if (az >= 360.0)
        az = 0.0;
    return az;
}

} // namespace skyshield
