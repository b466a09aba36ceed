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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace skyshield {

using Complex = std::complex<double>;
using Cvec = std::vector<Complex>;

// Uniform planar array in the xy-plane. Spacing in wavelengths.
struct UpaGeometry {
    std::size_t nx = 4;
    std::size_t ny = 4;
    double spacing = 0.5;

    UpaGeometry() = default;
    UpaGeometry(std::size_t nx, std::size_t ny, double spacing);

    std::size_t size() const noexcept { return nx * ny; }
};

double norm(std::span<const Complex> v) noexcept;

// Entry (m, n) at index m * ny + n is exp(j 2 pi spacing (m u + n v)),
// u = cos(el) cos(az), v = cos(el) sin(az).
Cvec upa_steering(const UpaGeometry& geom, double elevation_deg, double azimuth_deg);

// Received amplitude of weights w over channel h is sum_i h_i w_i; the power
// gain is its squared magnitude. mrt() and zf_null() are matched to this.
double beam_power_gain(std::span<const Complex> w, std::span<const Complex> h);

// conj(h) / ||h||. Throws ZeroChannel.
Cvec mrt(std::span<const Complex> h);

// Unit-norm precoder maximizing the gain towards h_user subject to zero gain
// towards every h_eves entry. Throws DimensionMismatch when lengths differ or
// there are not fewer eavesdroppers than antennas, DegenerateGeometry when
// h_user is numerically inside the eavesdropper span (relative residual
// below 1e-9).
Cvec zf_null(std::span<const Complex> h_user, std::span<const Cvec> h_eves);

// Receive combiner: same mathematics as zf_null with jammers in place of
// eavesdroppers.
Cvec receive_zf(std::span<const Complex> h_signal, std::span<const Cvec> h_jammers);

inline constexpr double kDegeneracyThreshold = 1e-9;

} // namespace skyshield
