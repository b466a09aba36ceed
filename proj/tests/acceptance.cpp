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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "oracles.hpp"

#include "skyshield/beamforming.hpp"
#include "skyshield/config_io.hpp"
#include "skyshield/error.hpp"
#include "skyshield/scenarios.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <string>

using namespace skyshield;

namespace {

// Pinned tolerances.
constexpr double kExpARuntimeS = 10.0;
constexpr double kExpBRuntimeS = 60.0;
constexpr double kPositioningGain = 0.1;  // bps/Hz, p_u >= 10 dBm
constexpr double kBaselineCeiling = 0.05; // bps/Hz at n_jam = 0
constexpr double kJammingGain = 0.2;      // bps/Hz, n_jam 0 -> 6 at the top p_t
constexpr double kNullResidual = 1e-10;
constexpr double kNormTolerance = 1e-12;

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o)
{
    fmt::print("[{}] #{} {}: {}\n", o.pass ? "PASS" : "FAIL", id, name, o.detail);
    if (!o.pass)
        ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// (p_u, scheme) -> row
struct ExpAResult {
    SweepTable table;
    double wall_s;
    std::map<std::string, std::vector<std::size_t>> by_scheme;
};

ExpAResult run_a(const ExpAConfig& cfg)
{
    const auto t0 = std::chrono::steady_clock::now();
    SweepTable t = run_exp_a(cfg);
    ExpAResult r{std::move(t), seconds_since(t0), {}};
    for (std::size_t i = 0; i < r.table.size(); ++i)
        r.by_scheme[r.table.text(i, "scheme")].push_back(i);
    return r;
}

Outcome crossover(const ExpAResult& a)
{
    const auto& with = a.by_scheme.at("optimized_with_jammer");
    const auto& without = a.by_scheme.at("optimized_no_jammer");
    std::vector<double> p, diff;
    for (std::size_t k = 0; k < with.size(); ++k) {
        p.push_back(a.table.number(with[k], "p_u_dbm"));
        diff.push_back(a.table.number(with[k], "secrecy_bps_hz") - a.table.number(without[k], "secrecy_bps_hz"));
    }
    for (double star : p) {
        bool ok = true;
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (p[k] <= star - 1.0 && !(diff[k] < 0.0))
                ok = false;
            if (p[k] >= star + 1.0 && !(diff[k] > 0.0))
                ok = false;
        }
        if (ok)
            return {a.wall_s < kExpARuntimeS, fmt::format("P* = {} dBm, runtime {:.2f} s", star, a.wall_s)};
    }
    return {false, "no crossover power in the sweep"};
}

Outcome positioning_gain(const ExpAResult& a)
{
    const auto& opt = a.by_scheme.at("optimized_no_jammer");
    const auto& fixed = a.by_scheme.at("fixed_above_user");
    double min_gain_high = INFINITY;
    for (std::size_t k = 0; k < opt.size(); ++k) {
        const double p = a.table.number(opt[k], "p_u_dbm");
        const double gain = a.table.number(opt[k], "secrecy_bps_hz") - a.table.number(fixed[k], "secrecy_bps_hz");
        if (!(gain > 0.0))
            return {false, fmt::format("no strict gain at {} dBm", p)};
        if (p >= 10.0)
            min_gain_high = std::min(min_gain_high, gain);
    }
    for (const char* s : {"optimized_no_jammer", "optimized_with_jammer"})
        for (std::size_t row : a.by_scheme.at(s))
            if (!(a.table.number(row, "x_star_m") < 0.0))
                return {false, fmt::format("{} x_star = {} at {} dBm", s, a.table.number(row, "x_star_m"),
                                           a.table.number(row, "p_u_dbm"))};
    return {min_gain_high >= kPositioningGain,
            fmt::format("min gain for p_u >= 10 dBm = {:.4f} bps/Hz; all x_star < 0", min_gain_high)};
}

Outcome jammer_approach()
{
    std::string detail;
    bool pass = true;
    for (double eve_x : {200.0, 400.0, 600.0}) {
        ExpAConfig cfg;
        cfg.eve_x = eve_x;
        const double p = dbm_to_watts(15.0);
        const auto without = optimize_uav_bs(cfg, p, false);
        const auto with = optimize_uav_bs(cfg, p, true);
        pass = pass && with.x_star > without.x_star;
        detail += fmt::format("eve_x {}: {} vs {}; ", eve_x, with.x_star, without.x_star);
    }
    return {pass, detail + "(with vs without jammer, m)"};
}

struct ExpBResult {
    SweepTable table;
    double wall_s;
    std::map<std::pair<double, int>, std::pair<double, double>> stat; // (p_t, n) -> (mean, ci)
};

ExpBResult run_b(const ExpBConfig& cfg, kernels::Parallelism par = {})
{
    const auto t0 = std::chrono::steady_clock::now();
    SweepTable t = run_exp_b(cfg, par);
    ExpBResult r{std::move(t), seconds_since(t0), {}};
    for (std::size_t i = 0; i < r.table.size(); ++i)
        r.stat[{r.table.number(i, "p_t_dbm"), static_cast<int>(r.table.number(i, "n_jammers"))}] = {
            r.table.number(i, "secrecy_mean_bps_hz"), r.table.number(i, "ci95_bps_hz")};
    return r;
}

Outcome zero_baseline(const ExpBResult& b, const ExpBConfig& cfg)
{
    double worst = 0.0;
    for (double p : cfg.p_t_sweep_dbm)
        worst = std::max(worst, b.stat.at({p, 0}).first);
    return {worst < kBaselineCeiling && b.wall_s < kExpBRuntimeS,
            fmt::format("max n_jam=0 secrecy {:.4f} bps/Hz over {} trials; runtime {:.2f} s", worst, cfg.trials,
                        b.wall_s)};
}

Outcome monotone_in_jammers(const ExpBResult& b, const ExpBConfig& cfg)
{
    for (double p : cfg.p_t_sweep_dbm)
        for (std::size_t k = 1; k < cfg.n_jammers_sweep.size(); ++k) {
            const auto [m0, c0] = b.stat.at({p, cfg.n_jammers_sweep[k - 1]});
            const auto [m1, c1] = b.stat.at({p, cfg.n_jammers_sweep[k]});
            if (m1 + c1 < m0 - c0)
                return {false, fmt::format("drop beyond CI at {} dBm, n_jam {} -> {}", p, cfg.n_jammers_sweep[k - 1],
                                           cfg.n_jammers_sweep[k])};
        }
    const double top = *std::max_element(cfg.p_t_sweep_dbm.begin(), cfg.p_t_sweep_dbm.end());
    const double rise = b.stat.at({top, 6}).first - b.stat.at({top, 0}).first;
    return {rise >= kJammingGain, fmt::format("nondecreasing within CI; n_jam 0 -> 6 at {} dBm: +{:.4f} bps/Hz", top, rise)};
}

Outcome power_ordering(const ExpBResult& b, const ExpBConfig& cfg)
{
    auto p = cfg.p_t_sweep_dbm;
    std::sort(p.begin(), p.end());
    std::string detail = "n_jam=10:";
    bool pass = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const double m = b.stat.at({p[k], 10}).first;
        detail += fmt::format(" {} dBm -> {:.4f};", p[k], m);
        if (k > 0 && !(m > b.stat.at({p[k - 1], 10}).first))
            pass = false;
    }
    return {pass, detail};
}

Outcome zf_correctness()
{
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> g(0.0, 1.0);
    const auto random_cvec = [&](std::size_t n) {
        Cvec v(n);
        for (auto& z : v)
            z = {g(rng), g(rng)};
        return v;
    };
    const std::size_t sizes[] = {2, 4, 8, 16};
    double worst_residual = 0.0, worst_norm = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = sizes[i % 4];
        const std::size_t k = static_cast<std::size_t>(i / 4) % n; // 0 .. N-1 eavesdroppers
        const auto hu = random_cvec(n);
        std::vector<Cvec> he;
        for (std::size_t j = 0; j < k; ++j)
            he.push_back(random_cvec(n));
        const auto w = zf_null(hu, he);
        worst_norm = std::max(worst_norm, std::abs(norm(w) - 1.0));
        for (const auto& h : he)
            worst_residual = std::max(worst_residual, std::sqrt(oracle::gain(w, h) / oracle::norm2(h)));
    }

    // Degenerate: user channel inside the span of the nulled channels.
    int raised = 0, degenerate = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = sizes[i % 4];
        const auto a = random_cvec(n);
        const auto b = random_cvec(n);
        const Complex ca{g(rng), g(rng)}, cb{g(rng), g(rng)};
        // With N = 2 only one channel may be nulled, so hu is a multiple of a.
        const bool pair = n > 2;
        Cvec hu(n);
        for (std::size_t j = 0; j < n; ++j)
            hu[j] = ca * a[j] + (pair ? cb * b[j] : Complex{});
        std::vector<Cvec> he{a};
        if (pair)
            he.push_back(b);
        ++degenerate;
        try {
            (void)zf_null(hu, he);
        } catch (const DegenerateGeometry&) {
            ++raised;
        }
    }
    const bool pass = worst_residual <= kNullResidual && worst_norm <= kNormTolerance && raised == degenerate;
    return {pass, fmt::format("1000 instances: worst residual {:.3e}, worst |norm-1| {:.3e}; {}/{} degenerate raised",
                              worst_residual, worst_norm, raised, degenerate)};
}

Outcome beam_altitude()
{
    const BeamDemoConfig cfg;
    BeamDemoConfig probe = cfg;
    probe.tx_altitudes = {10.0, 200.0};
    const auto t = run_beam_demo(probe);
    const double f10 = t.number(0, "user_gain_fraction");
    const double f200 = t.number(1, "user_gain_fraction");
    return {f200 > f10 && t.number(0, "degenerate") == 0.0 && t.number(1, "degenerate") == 0.0,
            fmt::format("user-gain fraction {:.4f} at 200 m vs {:.4f} at 10 m", f200, f10)};
}

Outcome oracle_equivalences()
{
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    int grid_mismatch = 0;
    for (int i = 0; i < 100; ++i) {
        const double a = c(rng), b = c(rng), d = c(rng);
        const Objective1d f = [=](double x) { return a * x + b * x * x + d * std::cos(7 * x); };
        const SearchGrid grid{-3.0, 3.0 + c(rng), 0.01 + 0.05 * (c(rng) + 1.0)};
        double bx = 0, bv = -INFINITY;
        for (double x : grid.points())
            if (f(x) > bv) {
                bv = f(x);
                bx = x;
            }
        const auto r = grid_argmax_1d(f, grid);
        grid_mismatch += !(r.x_star == bx && r.value == bv);
    }
    // Exp A objective too.
    {
        const ExpAObjective f(ExpAConfig{}, dbm_to_watts(15.0), true);
        double bx = 0, bv = -INFINITY;
        for (double x : ExpAConfig{}.search.points())
            if (f(x) > bv) {
                bv = f(x);
                bx = x;
            }
        const auto r = grid_argmax_1d(std::cref(f), ExpAConfig{}.search);
        grid_mismatch += !(r.x_star == bx && r.value == bv);
    }

    const TrialSampler sampler = [](std::uint64_t, RngStream& r) {
        std::exponential_distribution<double> e(1.0);
        return RatePair{std::log2(1.0 + 20.0 * e(r)), std::log2(1.0 + 8.0 * e(r))};
    };
    const std::uint64_t trials = 20000, seed = 5;
    double sum = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        RngStream r = substream(seed, t);
        const RatePair p = sampler(t, r);
        sum += std::max(0.0, p.legit - p.eve);
    }
    const bool ergodic_ok = ergodic_secrecy(sampler, trials, seed).mean_bps_hz == sum / static_cast<double>(trials);

    const ExpBConfig cfg;
    const auto sites = hex_layout(cfg.rings, cfg.isd, cfg.bs_height);
    const std::vector<Position> cand(sites.begin() + 1, sites.end());
    const JammerRankingChannels ch{FreeSpaceLoS(cfg.gamma0_air), TerrestrialFading(cfg.gamma0_terrestrial, cfg.alpha),
                                   cfg.pattern, true};
    const auto ranked = rank_jammer_bs(cand, cfg.uav(), {0, 0, 0}, ch);
    std::vector<std::size_t> expected(cand.size());
    std::vector<double> ratio;
    for (const auto& s : cand)
        ratio.push_back(oracle::jam_to_leak(s, cfg.uav(), {0, 0, 0}, cfg.gamma0_air, cfg.gamma0_terrestrial, cfg.alpha,
                                            cfg.pattern.downtilt_deg, cfg.pattern.theta3db_deg,
                                            cfg.pattern.max_attenuation_db));
    for (std::size_t i = 0; i < expected.size(); ++i)
        expected[i] = i;
    // Ratios equal to 1e-12 relative are ties, broken by site index.
    std::stable_sort(expected.begin(), expected.end(),
                     [&](std::size_t x, std::size_t y) { return ratio[x] > ratio[y] * (1 + 1e-12); });
    const bool rank_ok = ranked == expected;

    return {grid_mismatch == 0 && ergodic_ok && rank_ok,
            fmt::format("grid argmax mismatches {}/101; ergodic exact {}; 19-site ranking {}", grid_mismatch,
                        ergodic_ok ? "yes" : "no", rank_ok ? "matches" : "differs")};
}

std::string envelope_without_time(const nlohmann::json& echo, const SweepTable& t)
{
    auto env = result_envelope(echo, t, 0.0);
    env.erase("wall_time_s");
    return env.dump(2);
}

Outcome determinism(const ExpAResult& a, const ExpBResult& b)
{
    const ExpAConfig acfg;
    const ExpBConfig bcfg;
    bool pass = true;
    std::string detail;

    const auto a1 = run_exp_a(acfg, {1});
    const auto a8 = run_exp_a(acfg, {8});
    const bool a_ok = a1.to_csv() == a.table.to_csv() && a8.to_csv() == a.table.to_csv() &&
                      envelope_without_time(to_json(acfg), a1) == envelope_without_time(to_json(acfg), a8);
    pass = pass && a_ok;
    detail += fmt::format("exp_a {} (workers 1, 8, default); ", a_ok ? "identical" : "differs");

    const auto b1 = run_exp_b(bcfg, {1});
    const auto b8 = run_exp_b(bcfg, {8});
    const bool b_ok = b1.to_csv() == b.table.to_csv() && b8.to_csv() == b.table.to_csv() &&
                      envelope_without_time(to_json(bcfg), b1) == envelope_without_time(to_json(bcfg), b8);
    pass = pass && b_ok;
    detail += fmt::format("exp_b {} (workers 1, 8, default); ", b_ok ? "identical" : "differs");

    const bool d_ok = run_beam_demo(BeamDemoConfig{}).to_csv() == run_beam_demo(BeamDemoConfig{}).to_csv();
    pass = pass && d_ok;
    detail += fmt::format("beam_demo {} on rerun", d_ok ? "identical" : "differs");
    return {pass, detail};
}

} // namespace

int main()
{
    try {
        const ExpAConfig acfg;
        const auto a = run_a(acfg);
        report(1, "Exp-A crossover", crossover(a));
        report(2, "Exp-A positioning gain", positioning_gain(a));
        report(3, "Exp-A jammer lets the UAV-BS approach", jammer_approach());

        const ExpBConfig bcfg;
        const auto b = run_b(bcfg);
        report(4, "Exp-B zero baseline", zero_baseline(b, bcfg));
        report(5, "Exp-B monotone in jammers", monotone_in_jammers(b, bcfg));
        report(6, "Exp-B power ordering", power_ordering(b, bcfg));

        report(7, "ZF correctness", zf_correctness());
        report(8, "Beam-demo altitude effect", beam_altitude());
        report(9, "Oracle equivalences", oracle_equivalences());
        report(10, "Determinism", determinism(a, b));
    } catch (const std::exception& e) {
        fmt::print("[FAIL] acceptance aborted: {}\n", e.what());
        return 1;
    }
    fmt::print("{} failure(s)\n", failures);
    return failures == 0 ? 0 : 1;
}
