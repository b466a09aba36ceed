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

// skyshield: run the UAV physical-layer security experiments from the shell.
//
//   skyshield exp-a [--config a.json] [--out a.csv]
//   skyshield exp-b --set trials=100 --seed 7 --workers 4
//   skyshield beam-demo --format json
//   skyshield validate-config configs/*.json
//
// Exit codes: 0 success, 2 usage or config error, 3 runtime error.

#include "skyshield/config_io.hpp"
#include "skyshield/error.hpp"
#include "skyshield/scenarios.hpp"
#include "skyshield/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

struct RunManifest {
    skyshield::Experiment experiment = skyshield::Experiment::ExpA;
    std::string config_path;
    std::vector<std::string> overrides;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    int workers = 0;
    std::string out_path;
    std::string format = "csv";
};

void setup_logging()
{
    auto logger = spdlog::stderr_color_mt("skyshield");
    logger->set_pattern("[%l] %v");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::info);
    if (const char* env = std::getenv("SKYSHIELD_LOG"))
        spdlog::set_level(spdlog::level::from_str(env));
}

nlohmann::json build_document(const RunManifest& m)
{
    nlohmann::json doc = m.config_path.empty()
                             ? nlohmann::json{{"schema_version", skyshield::kSchemaVersion},
                                              {"experiment", skyshield::to_string(m.experiment)}}
                             : skyshield::load_json_file(m.config_path);
    skyshield::apply_overrides(doc, m.overrides);
    if (m.seed)
        doc["seed"] = *m.seed;
    if (m.trials)
        doc["trials"] = *m.trials;
    return doc;
}

void write_output(const RunManifest& m, const std::string& payload)
{
    if (m.out_path.empty()) {
        std::cout << payload;
        std::cout.flush();
        return;
    }
    std::ofstream out(m.out_path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open '" + m.out_path + "' for writing");
    out << payload;
    if (!out)
        throw std::runtime_error("failed writing '" + m.out_path + "'");
}

int run_experiment(const RunManifest& m)
{
    using clock = std::chrono::steady_clock;
    nlohmann::json echo;
    skyshield::ExpAConfig cfg_a;
    skyshield::ExpBConfig cfg_b;
    skyshield::BeamDemoConfig cfg_beam;
    try {
        const auto doc = build_document(m);
        switch (m.experiment) {
        case skyshield::Experiment::ExpA:
            cfg_a = skyshield::exp_a_from_json(doc);
            echo = skyshield::to_json(cfg_a);
            break;
        case skyshield::Experiment::ExpB:
            cfg_b = skyshield::exp_b_from_json(doc);
            echo = skyshield::to_json(cfg_b);
            break;
        case skyshield::Experiment::BeamDemo:
            cfg_beam = skyshield::beam_demo_from_json(doc);
            echo = skyshield::to_json(cfg_beam);
            break;
        }
    } catch (const skyshield::ConfigError& e) {
        spdlog::error("config error: {}", e.what());
        return kExitConfig;
    }
    spdlog::info("config: {}", echo.dump());

    const skyshield::kernels::Parallelism par{m.workers};
    spdlog::debug("workers: {} (runtime max {})", m.workers, skyshield::kernels::max_workers());
    try {
        const auto start = clock::now();
        std::optional<skyshield::SweepTable> table;
        switch (m.experiment) {
        case skyshield::Experiment::ExpA:
            table = skyshield::run_exp_a(cfg_a, par);
            break;
        case skyshield::Experiment::ExpB:
            table = skyshield::run_exp_b(cfg_b, par);
            break;
        case skyshield::Experiment::BeamDemo:
            table = skyshield::run_beam_demo(cfg_beam);
            break;
        }
        const double wall = std::chrono::duration<double>(clock::now() - start).count();

        const std::string payload = m.format == "json"
                                        ? skyshield::result_envelope(echo, *table, wall).dump(2) + "\n"
                                        : table->to_csv();
        write_output(m, payload);
        spdlog::info("{} rows in {:.3f} s", table->size(), wall);
    } catch (const skyshield::ConfigError& e) {
        spdlog::error("config error: {}", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        spdlog::error("runtime error: {}", e.what());
        return kExitRuntime;
    }
    return kExitOk;
}

int validate_configs(const std::vector<std::string>& paths)
{
    int status = kExitOk;
    for (const auto& path : paths) {
        try {
            const auto doc = skyshield::load_json_file(path);
            if (!doc.is_object() || !doc.contains("experiment") || !doc["experiment"].is_string())
                throw skyshield::ConfigError("experiment", "required to validate a standalone config");
            switch (skyshield::experiment_from_string(doc["experiment"].get<std::string>())) {
            case skyshield::Experiment::ExpA:
                (void)skyshield::exp_a_from_json(doc);
                break;
            case skyshield::Experiment::ExpB:
                (void)skyshield::exp_b_from_json(doc);
                break;
            case skyshield::Experiment::BeamDemo:
                (void)skyshield::beam_demo_from_json(doc);
                break;
            }
            std::cout << path << ": ok\n";
        } catch (const skyshield::ConfigError& e) {
            std::cout << path << ": invalid: " << e.what() << "\n";
            status = kExitConfig;
        }
    }
    return status;
}

void add_run_options(CLI::App* cmd, RunManifest& m, bool stochastic)
{
    cmd->add_option("--config", m.config_path, "JSON config file")->check(CLI::ExistingFile);
    cmd->add_option("--out", m.out_path, "Output file (default: stdout)");
    cmd->add_option("--format", m.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--set", m.overrides, "Override a config field, key=value (dotted keys, repeatable)")
        ->allow_extra_args(false);
    cmd->add_option("--workers", m.workers, "Parallel worker cap (0 = all cores)")->check(CLI::NonNegativeNumber);
    if (stochastic) {
        cmd->add_option("--seed", m.seed, "Monte-Carlo seed (default 42)");
        cmd->add_option("--trials", m.trials, "Monte-Carlo trials per sweep point")->check(CLI::PositiveNumber);
    }
}

} // namespace

int main(int argc, char** argv)
{
    setup_logging();

    CLI::App app{"UAV physical-layer security experiments"};
    app.set_version_flag("--version", std::string(skyshield::kArtifactVersion));
    app.require_subcommand(1);

    RunManifest exp_a;
    exp_a.experiment = skyshield::Experiment::ExpA;
    RunManifest exp_b;
    exp_b.experiment = skyshield::Experiment::ExpB;
    RunManifest beam;
    beam.experiment = skyshield::Experiment::BeamDemo;
    std::vector<std::string> validate_paths;

    auto* cmd_a = app.add_subcommand("exp-a", "UAV-assisted jamming: secrecy rate vs UAV-BS transmit power");
    add_run_options(cmd_a, exp_a, false);
    auto* cmd_b = app.add_subcommand("exp-b", "Cooperative remote jamming: secrecy rate vs jamming BS count");
    add_run_options(cmd_b, exp_b, true);
    auto* cmd_beam = app.add_subcommand("beam-demo", "3D zero-forcing beam nulling vs transmitter altitude");
    add_run_options(cmd_beam, beam, false);
    auto* cmd_validate = app.add_subcommand("validate-config", "Check config files without running them");
    cmd_validate->add_option("configs", validate_paths, "Config files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return kExitConfig;
    }

    if (*cmd_a)
        return run_experiment(exp_a);
    if (*cmd_b)
        return run_experiment(exp_b);
    if (*cmd_beam)
        return run_experiment(beam);
    return validate_configs(validate_paths);
}
