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

#include "skyshield/kernels.hpp"
#include "skyshield/rng.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace skyshield {

struct PowerGain {
    double power_w = 0.0;
    double gain = 0.0; // noise-normalized, per watt
};

// Noise is normalized to 1.
struct LinkBudget {
    PowerGain desired;
    std::vector<PowerGain> interferers;
};

double sinr(const LinkBudget& budget) noexcept;

// Same as sinr() for a budget whose interferers all transmit at one power;
// the gains are summed in the given order.
double sinr(PowerGain desired, double interferer_power_w, std::span<const double> interferer_gains) noexcept;

// log2(1 + sinr), bits/s/Hz
double rate(double sinr) noexcept;

// [rate_legit - rate_eve]^+
double secrecy_rate(double rate_legit, double rate_eve) noexcept;

struct SecrecyStat {
    double mean_bps_hz = 0.0;
    double half_width_95 = 0.0;
    std::uint64_t trials = 0;
};

struct RatePair {
    double legit = 0.0;
    double eve = 0.0;
};

enum class SecrecyAveraging {
    PerRealization, // E[(R_l - R_e)^+]
    ClampOfMeans,   // (E R_l - E R_e)^+
};

// One trial: (trial index, that trial's private stream) -> rates.
// Called concurrently from several threads; must not share mutable state.
using TrialSampler = std::function<RatePair(std::uint64_t trial, RngStream& rng)>;

struct ErgodicOptions {
    SecrecyAveraging averaging = SecrecyAveraging::PerRealization;
    kernels::Parallelism parallelism{};
};

// Monte-Carlo secrecy rate. Trial i draws from substream(seed, i), so the
// result is bit-identical for any worker count.
SecrecyStat ergodic_secrecy(const TrialSampler& sampler, std::uint64_t trials, std::uint64_t seed,
                            const ErgodicOptions& options = {});

// Single-threaded reference for ergodic_secrecy.
SecrecyStat ergodic_secrecy_serial(const TrialSampler& sampler, std::uint64_t trials, std::uint64_t seed,
                                   SecrecyAveraging averaging = SecrecyAveraging::PerRealization);

// Reduce per-trial rate pairs in index order.
SecrecyStat aggregate(std::span<const RatePair> per_trial, SecrecyAveraging averaging);

// Mean and 1.96 * sample_std / sqrt(n), summed in index order.
SecrecyStat summarize(std::span<const double> per_trial);

} // namespace skyshield
