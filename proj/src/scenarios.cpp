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

#include "skyshield/scenarios.hpp"

#include "skyshield/beamforming.hpp"
#include "skyshield/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace skyshield {

std::vector<Position> hex_layout(int rings, double isd, double height)
{
    if (rings < 0)
        throw std::invalid_argument("rings must be >= 0");

    // Lattice basis a1 = (isd, 0), a2 = (isd / 2, isd sqrt(3) / 2). Walking a
    // ring from its azimuth-0 corner uses these six steps, k times each.
    constexpr std::array<std::array<int, 2>, 6> steps{{{-1, 1}, {-1, 0}, {0, -1}, {1, -1}, {1, 0}, {0, 1}}};
    const auto to_position = [&](int i, int j) {
        return Position{isd * (i + 0.5 * j), isd * (std::numbers::sqrt3 / 2.0) * j, height};
    };

    std::vector<Position> sites;
    sites.reserve(static_cast<std::size_t>(1 + 3 * rings * (rings + 1)));
    sites.push_back(to_position(0, 0));
    for (int k = 1; k <= rings; ++k) {
        int i = k;
        int j = 0;
        for (const auto& s : steps) {
            for (int n = 0; n < k; ++n) {
                sites.push_back(to_position(i, j));
                i += s[0];
                j += s[1];
            }
        }
    }
    return sites;
}

Position drop_user(RngStream& rng, const Position& center, double radius)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = radius * std::sqrt(unit(rng));
    const double theta = 2.0 * std::numbers::pi * unit(rng);
    return {center.x + r * std::cos(theta), center.y + r * std::sin(theta), 0.0};
}

// ---------------------------------------------------------------------------

SweepTable run_exp_a(const ExpAConfig& cfg, kernels::Parallelism par)
{
    validate(cfg);
    SweepTable table({"p_u_dbm", "scheme", "x_star_m", "secrecy_bps_hz"});
    for (double p_dbm : cfg.p_u_sweep_dbm) {
        const double p_w = dbm_to_watts(p_dbm);
        for (auto scheme : cfg.schemes) {
            GridOptimum best;
            switch (scheme) {
            case ExpAScheme::OptimizedWithJammer:
                best = optimize_uav_bs(cfg, p_w, true, par);
                break;
            case ExpAScheme::OptimizedNoJammer:
                best = optimize_uav_bs(cfg, p_w, false, par);
                break;
            case ExpAScheme::FixedAboveUser:
                best = {cfg.user.x, ExpAObjective(cfg, p_w, false)(cfg.user.x)};
                break;
            }
            table.add_row({p_dbm, to_string(scheme), best.x_star, best.value});
        }
    }
    return table;
}

// ---------------------------------------------------------------------------

ExpBModel::ExpBModel(const ExpBConfig& cfg)
    : cfg_(cfg),
      ground_(cfg.gamma0_terrestrial, cfg.alpha),
      air_(cfg.gamma0_air)
{
    validate(cfg_);
    sites_ = hex_layout(cfg_.rings, cfg_.isd, cfg_.bs_height);
    uav_ = cfg_.uav();
    for (double p : cfg_.p_t_sweep_dbm)
        p_t_watts_.push_back(dbm_to_watts(p));

    const std::vector<Position> candidates(sites_.begin() + 1, sites_.end());
    const JammerRankingChannels ch{air_, ground_, cfg_.pattern, cfg_.pattern_enabled};
    for (std::size_t idx : rank_jammer_bs(candidates, uav_, Position{0.0, 0.0, 0.0}, ch))
        jammer_order_.push_back(idx + 1);

    fixed_serving_to_eve_ = bs_gain(sites_[0], uav_, false, 1.0);
    for (std::size_t s : jammer_order_)
        fixed_jammers_to_eve_.push_back(bs_gain(sites_[s], uav_, false, 1.0));
}

std::size_t ExpBModel::points() const noexcept
{
    return cfg_.p_t_sweep_dbm.size() * cfg_.n_jammers_sweep.size();
}

// Link distances are floored at the 1 m reference distance.
double ExpBModel::bs_gain(const Position& bs, const Position& target, bool terrestrial, double fade) const
{
    const double d = std::max(distance(bs, target), 1.0);
    double g = terrestrial ? terrestrial_gain(ground_, d, fade) : los_gain(air_, d);
    if (cfg_.pattern_enabled)
        g *= pattern_gain(cfg_.pattern, elevation_angle(bs, target));
    return g;
}

ExpBDraw ExpBModel::draw(RngStream& rng) const
{
    ExpBDraw d;
    d.user = drop_user(rng, Position{0.0, 0.0, 0.0}, cfg_.cell_radius);

    std::vector<double> fades(sites_.size(), 1.0);
    if (cfg_.fading == FadingLaw::Rayleigh)
        for (auto& f : fades)
            f = sample_fade(rng);

    d.serving_to_user = bs_gain(sites_[0], d.user, true, fades[0]);
    d.jammers_to_user.reserve(jammer_order_.size());
    for (std::size_t s : jammer_order_)
        d.jammers_to_user.push_back(bs_gain(sites_[s], d.user, true, fades[s]));

    if (cfg_.uav_track_user) {
        d.serving_to_eve = bs_gain(sites_[0], d.user, false, 1.0);
        d.jammers_to_eve.reserve(jammer_order_.size());
        for (std::size_t s : jammer_order_)
            d.jammers_to_eve.push_back(bs_gain(sites_[s], d.user, false, 1.0));
    } else {
        d.serving_to_eve = fixed_serving_to_eve_;
        d.jammers_to_eve = fixed_jammers_to_eve_;
    }
    return d;
}

RatePair ExpBModel::rates(const ExpBDraw& d, double p_t_watts, int n_jammers) const
{
    const auto n = static_cast<std::size_t>(n_jammers);
    const double legit =
        rate(sinr({p_t_watts, d.serving_to_user}, p_t_watts, std::span(d.jammers_to_user).first(n)));
    const double eve = rate(sinr({p_t_watts, d.serving_to_eve}, p_t_watts, std::span(d.jammers_to_eve).first(n)));
    return {legit, eve};
}

void ExpBModel::trial(std::uint64_t t, double* out) const
{
    RngStream rng = substream(cfg_.seed, t);
    const ExpBDraw d = draw(rng);
    std::size_t k = 0;
    for (double p : p_t_watts_) {
        for (int n : cfg_.n_jammers_sweep) {
            const RatePair r = rates(d, p, n);
            out[k++] = r.legit;
            out[k++] = r.eve;
        }
    }
}

std::vector<double> exp_b_trial_matrix(const ExpBModel& model, kernels::Parallelism par)
{
    return kernels::omp::fill_rows(
        model.config().trials, 2 * model.points(), [&](std::size_t t, double* row) { model.trial(t, row); }, par);
}

std::vector<double> exp_b_trial_matrix_serial(const ExpBModel& model)
{
    return kernels::serial::fill_rows(model.config().trials, 2 * model.points(),
                                      [&](std::size_t t, double* row) { model.trial(t, row); });
}

std::vector<SecrecyStat> exp_b_stats(const ExpBModel& model, std::span<const double> trial_matrix)
{
    const std::size_t points = model.points();
    const std::size_t trials = model.config().trials;
    if (trial_matrix.size() != trials * 2 * points)
        throw DimensionMismatch("trial matrix does not match the model's sweep");

    std::vector<SecrecyStat> stats;
    stats.reserve(points);
    std::vector<RatePair> column(trials);
    for (std::size_t p = 0; p < points; ++p) {
        for (std::size_t t = 0; t < trials; ++t)
            column[t] = {trial_matrix[t * 2 * points + 2 * p], trial_matrix[t * 2 * points + 2 * p + 1]};
        stats.push_back(aggregate(column, model.config().averaging));
    }
    return stats;
}

SweepTable run_exp_b(const ExpBConfig& cfg, kernels::Parallelism par)
{
    const ExpBModel model(cfg);
    const auto matrix = exp_b_trial_matrix(model, par);
    const auto stats = exp_b_stats(model, matrix);

    SweepTable table({"p_t_dbm", "n_jammers", "secrecy_mean_bps_hz", "ci95_bps_hz", "trials", "seed"});
    std::size_t k = 0;
    for (double p : cfg.p_t_sweep_dbm) {
        for (int n : cfg.n_jammers_sweep) {
            const SecrecyStat& s = stats[k++];
            table.add_row({p, static_cast<std::int64_t>(n), s.mean_bps_hz, s.half_width_95,
                           static_cast<std::int64_t>(s.trials), static_cast<std::int64_t>(cfg.seed)});
        }
    }
    return table;
}

// ---------------------------------------------------------------------------

SweepTable run_beam_demo(const BeamDemoConfig& cfg)
{
    validate(cfg);
    const FreeSpaceLoS los(cfg.gamma0);
    const double p_w = dbm_to_watts(cfg.p_tx_dbm);

    SweepTable table({"altitude_m", "elevation_sep_deg", "user_gain_fraction", "degenerate", "secrecy_mrt_bps_hz",
                      "secrecy_zf_bps_hz"});
    for (double h : cfg.tx_altitudes) {
        const Position tx{0.0, 0.0, h};
        const double el_u = elevation_angle(tx, cfg.user);
        const double el_e = elevation_angle(tx, cfg.eve);

        auto channel = [&](const Position& node, double el) {
            Cvec a = upa_steering(cfg.array, el, azimuth_angle(tx, node));
            const double amp = std::sqrt(los_gain(los, std::max(distance(tx, node), 1.0)));
            for (auto& z : a)
                z *= amp;
            return a;
        };
        const Cvec h_u = channel(cfg.user, el_u);
        const std::vector<Cvec> h_e{channel(cfg.eve, el_e)};
        const double user_norm2 = norm(h_u) * norm(h_u);

        const Cvec w_mrt = mrt(h_u);
        const double s_mrt =
            secrecy_rate(rate(p_w * beam_power_gain(w_mrt, h_u)), rate(p_w * beam_power_gain(w_mrt, h_e[0])));

        std::int64_t degenerate = 0;
        double fraction = 0.0;
        double s_zf = 0.0;
        try {
            const Cvec w_zf = zf_null(h_u, h_e);
            const double g_u = beam_power_gain(w_zf, h_u);
            fraction = g_u / user_norm2;
            s_zf = secrecy_rate(rate(p_w * g_u), rate(p_w * beam_power_gain(w_zf, h_e[0])));
        } catch (const DegenerateGeometry&) {
            degenerate = 1;
        }
        table.add_row({h, std::abs(el_u - el_e), fraction, degenerate, s_mrt, s_zf});
    }
    return table;
}

} // namespace skyshield
