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

// Independent reference computations used only by the tests. Nothing here
// calls into the library routine it is used to check.

#include "skyshield/beamforming.hpp"
#include "skyshield/geometry.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace oracle {

// Distances from the origin of the 1 + 3 r (r + 1) nearest points of the
// hexagonal lattice, found by brute-force enumeration of a large patch.
inline std::vector<double> hex_distances(int rings, double isd)
{
    std::vector<double> d;
    const int span = 3 * rings + 3;
    for (int i = -span; i <= span; ++i)
        for (int j = -span; j <= span; ++j) {
            const double x = isd * (i + 0.5 * j);
            const double y = isd * std::sqrt(3.0) / 2.0 * j;
            d.push_back(std::sqrt(x * x + y * y));
        }
    std::sort(d.begin(), d.end());
    d.resize(static_cast<std::size_t>(1 + 3 * rings * (rings + 1)));
    return d;
}

// ZF by least squares: w = c - A A^+ c with c = conj(h_user) and the columns
// of A the conjugated nulled channels; then normalized.
inline skyshield::Cvec zf_least_squares(const skyshield::Cvec& h_user, const std::vector<skyshield::Cvec>& nulls)
{
    const auto n = static_cast<Eigen::Index>(h_user.size());
    Eigen::VectorXcd c(n);
    for (Eigen::Index i = 0; i < n; ++i)
        c(i) = std::conj(h_user[static_cast<std::size_t>(i)]);
    Eigen::VectorXcd w = c;
    if (!nulls.empty()) {
        Eigen::MatrixXcd a(n, static_cast<Eigen::Index>(nulls.size()));
        for (std::size_t k = 0; k < nulls.size(); ++k)
            for (Eigen::Index i = 0; i < n; ++i)
                a(i, static_cast<Eigen::Index>(k)) = std::conj(nulls[k][static_cast<std::size_t>(i)]);
        const Eigen::VectorXcd coeff = a.completeOrthogonalDecomposition().solve(c);
        w = c - a * coeff;
    }
    w /= w.norm();
    skyshield::Cvec out(h_user.size());
    for (Eigen::Index i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = w(i);
    return out;
}

// Planar-array response written out from its definition, separately from
// upa_steering (element (m, n) stored at m * ny + n).
inline skyshield::Cvec steering(std::size_t nx, std::size_t ny, double spacing, double el_deg, double az_deg)
{
    const double el = el_deg * std::numbers::pi / 180.0;
    const double az = az_deg * std::numbers::pi / 180.0;
    skyshield::Cvec a;
    for (std::size_t m = 0; m < nx; ++m)
        for (std::size_t n = 0; n < ny; ++n) {
            const double phase = 2.0 * std::numbers::pi * spacing *
                                 (m * std::cos(el) * std::cos(az) + n * std::cos(el) * std::sin(az));
            a.emplace_back(std::cos(phase), std::sin(phase));
        }
    return a;
}

inline double gain(const skyshield::Cvec& w, const skyshield::Cvec& h)
{
    std::complex<double> s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i)
        s += h[i] * w[i];
    return std::norm(s);
}

inline double norm2(const skyshield::Cvec& h)
{
    double s = 0.0;
    for (const auto& z : h)
        s += std::norm(z);
    return s;
}

// Jam-to-leak ratio evaluated straight from the link formulas.
inline double jam_to_leak(const skyshield::Position& c, const skyshield::Position& uav,
                          const skyshield::Position& center, double gamma0_air, double gamma0_ground, double alpha,
                          double downtilt, double theta3db, double cap_db)
{
    const double dx = c.x - uav.x, dy = c.y - uav.y, dz = c.z - uav.z;
    const double d_uav2 = dx * dx + dy * dy + dz * dz;
    const double el = std::atan2(uav.z - c.z, std::sqrt(dx * dx + dy * dy)) * 180.0 / std::numbers::pi;
    const double off = (el + downtilt) / theta3db;
    const double att_db = std::min(12.0 * off * off, cap_db);
    const double jam = gamma0_air / d_uav2 * std::pow(10.0, -att_db / 10.0);
    const double ex = c.x - center.x, ey = c.y - center.y, ez = c.z - center.z;
    const double leak = gamma0_ground * std::pow(std::sqrt(ex * ex + ey * ey + ez * ez), -alpha);
    return jam / leak;
}

} // namespace oracle
