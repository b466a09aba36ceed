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

#include "skyshield/beamforming.hpp"

#include "skyshield/error.hpp"
#include "skyshield/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace skyshield {

namespace {

// <a, b> = sum conj(a_i) b_i
Complex inner(std::span<const Complex> a, std::span<const Complex> b) noexcept
{
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += std::conj(a[i]) * b[i];
    return acc;
}

// r -= q <q, r> for each orthonormal q, done twice (classical GS with
// reorthogonalization keeps the residual orthogonal to working precision).
void project_out(Cvec& r, const std::vector<Cvec>& basis)
{
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : basis) {
            const Complex c = inner(q, r);
            for (std::size_t i = 0; i < r.size(); ++i)
                r[i] -= c * q[i];
        }
    }
}

} // namespace

UpaGeometry::UpaGeometry(std::size_t nx_, std::size_t ny_, double spacing_) : nx(nx_), ny(ny_), spacing(spacing_)
{
    if (nx == 0 || ny == 0)
        throw ConfigError("array", "nx and ny must be >= 1");
    if (!(spacing > 0.0) || !std::isfinite(spacing))
        throw ConfigError("array.spacing", "must be > 0");
}

double norm(std::span<const Complex> v) noexcept
{
    double s = 0.0;
    for (const auto& z : v)
        s += std::norm(z);
    return std::sqrt(s);
}

Cvec upa_steering(const UpaGeometry& geom, double elevation_deg, double azimuth_deg)
{
    const double el = deg_to_rad(elevation_deg);
    const double az = deg_to_rad(azimuth_deg);
    const double u = std::cos(el) * std::cos(az);
    const double v = std::cos(el) * std::sin(az);
    const double k = 2.0 * std::numbers::pi * geom.spacing;

    Cvec a(geom.size());
    for (std::size_t m = 0; m < geom.nx; ++m)
        for (std::size_t n = 0; n < geom.ny; ++n)
            a[m * geom.ny + n] = std::polar(1.0, k * (static_cast<double>(m) * u + static_cast<double>(n) * v));
    return a;
}

double beam_power_gain(std::span<const Complex> w, std::span<const Complex> h)
{
    if (w.size() != h.size())
        throw DimensionMismatch("weights have " + std::to_string(w.size()) + " entries, channel has " +
                                std::to_string(h.size()));
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < w.size(); ++i)
        acc += h[i] * w[i];
    return std::norm(acc);
}

Cvec mrt(std::span<const Complex> h)
{
    const double n = norm(h);
    if (!(n > 0.0))
        throw ZeroChannel("matched filter needs a nonzero channel");
    Cvec w(h.size());
    for (std::size_t i = 0; i < h.size(); ++i)
        w[i] = std::conj(h[i]) / n;
    return w;
}

Cvec zf_null(std::span<const Complex> h_user, std::span<const Cvec> h_eves)
{
    const std::size_t n_ant = h_user.size();
    if (n_ant == 0)
        throw DimensionMismatch("empty channel vector");
    if (h_eves.size() >= n_ant)
        throw DimensionMismatch(std::to_string(h_eves.size()) + " nulls requested with only " +
                                std::to_string(n_ant) + " antennas");

    const double user_norm = norm(h_user);
    if (!(user_norm > 0.0))
        throw ZeroChannel("user channel is zero");

    // Orthonormal basis of span{conj(h_e)}; dependent eavesdropper channels
    // add nothing and are skipped.
    std::vector<Cvec> basis;
    basis.reserve(h_eves.size());
    for (const auto& h : h_eves) {
        if (h.size() != n_ant)
            throw DimensionMismatch("eavesdropper channel has " + std::to_string(h.size()) + " entries, expected " +
                                    std::to_string(n_ant));
        const double hn = norm(h);
        if (!(hn > 0.0))
            continue;
        Cvec q(n_ant);
        for (std::size_t i = 0; i < n_ant; ++i)
            q[i] = std::conj(h[i]);
        project_out(q, basis);
        const double qn = norm(q);
        if (qn <= kDegeneracyThreshold * hn)
            continue;
        for (auto& z : q)
            z /= qn;
        basis.push_back(std::move(q));
    }

    Cvec w(n_ant);
    for (std::size_t i = 0; i < n_ant; ++i)
        w[i] = std::conj(h_user[i]);
    project_out(w, basis);

    const double residual = norm(w);
    if (residual < kDegeneracyThreshold * user_norm)
        throw DegenerateGeometry("user channel lies in the span of the nulled channels (relative residual " +
                                 std::to_string(residual / user_norm) + ")");
    for (auto& z : w)
        z /= residual;
    return w;
}

Cvec receive_zf(std::span<const Complex> h_signal, std::span<const Cvec> h_jammers)
{
    return zf_null(h_signal, h_jammers);
}

} // namespace skyshield
