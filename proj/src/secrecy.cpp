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

#include "skyshield/secrecy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace skyshield {

double sinr(const LinkBudget& budget) noexcept
{
    double interference = 1.0;
    for (const auto& i : budget.interferers)
        interference += i.power_w * i.gain;
    return budget.desired.power_w * budget.desired.gain / interference;
}

double sinr(PowerGain desired, double interferer_power_w, std::span<const double> interferer_gains) noexcept
{
    double interference = 1.0;
    for (double g : interferer_gains)
        interference += interferer_power_w * g;
    return desired.power_w * desired.gain / interference;
}

double rate(double sinr) noexcept { return std::log2(1.0 + sinr); }

double secrecy_rate(double rate_legit, double rate_eve) noexcept { return std::max(0.0, rate_legit - rate_eve); }

SecrecyStat summarize(std::span<const double> per_trial)
{
    SecrecyStat stat;
    stat.trials = per_trial.size();
    if (per_trial.empty())
        return stat;
    double sum = 0.0;
    for (double v : per_trial)
        sum += v;
    const double n = static_cast<double>(per_trial.size());
    stat.mean_bps_hz = sum / n;
    if (per_trial.size() > 1) {
        double ss = 0.0;
        for (double v : per_trial)
            ss += (v - stat.mean_bps_hz) * (v - stat.mean_bps_hz);
        stat.half_width_95 = 1.96 * std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    }
    return stat;
}

SecrecyStat aggregate(std::span<const RatePair> pairs, SecrecyAveraging averaging)
{
    std::vector<double> values(pairs.size());
    if (averaging == SecrecyAveraging::PerRealization) {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            values[i] = secrecy_rate(pairs[i].legit, pairs[i].eve);
        return summarize(values);
    }
    double legit = 0.0;
    double eve = 0.0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        legit += pairs[i].legit;
        eve += pairs[i].eve;
        values[i] = pairs[i].legit - pairs[i].eve;
    }
    SecrecyStat stat = summarize(values);
    const double n = static_cast<double>(pairs.size());
    stat.mean_bps_hz = secrecy_rate(legit / n, eve / n);
    return stat;
}

namespace {

void require_trials(std::uint64_t trials)
{
    if (trials == 0)
        throw std::invalid_argument("ergodic_secrecy needs at least one trial");
}

} // namespace

SecrecyStat ergodic_secrecy(const TrialSampler& sampler, std::uint64_t trials, std::uint64_t seed,
                            const ErgodicOptions& options)
{
    require_trials(trials);
    auto pairs = kernels::omp::fill<RatePair>(
        trials,
        [&](std::size_t i) {
            RngStream rng = substream(seed, i);
            return sampler(i, rng);
        },
        options.parallelism);
    return aggregate(pairs, options.averaging);
}

SecrecyStat ergodic_secrecy_serial(const TrialSampler& sampler, std::uint64_t trials, std::uint64_t seed,
                                   SecrecyAveraging averaging)
{
    require_trials(trials);
    auto pairs = kernels::serial::fill<RatePair>(trials, [&](std::size_t i) {
        RngStream rng = substream(seed, i);
        return sampler(i, rng);
    });
    return aggregate(pairs, averaging);
}

} // namespace skyshield
