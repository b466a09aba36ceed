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

#include "skyshield/config.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace skyshield {

enum class Experiment { ExpA, ExpB, BeamDemo };

std::string to_string(Experiment e);
// Accepts "exp_a", "exp-a" and friends. Throws ConfigError.
Experiment experiment_from_string(std::string_view name);

// Config documents look like
//   {"schema_version": 1, "experiment": "exp_b", "trials": 10000, ...}
// Every key is optional except schema_version; unknown keys are rejected.
ExpAConfig exp_a_from_json(const nlohmann::json& doc);
ExpBConfig exp_b_from_json(const nlohmann::json& doc);
BeamDemoConfig beam_demo_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const ExpAConfig& cfg);
nlohmann::json to_json(const ExpBConfig& cfg);
nlohmann::json to_json(const BeamDemoConfig& cfg);

// Throws ConfigError("config", ...) when the file is missing or not JSON.
nlohmann::json load_json_file(const std::filesystem::path& path);

// Applies "a.b.c=value" assignments. The value is parsed as JSON when it
// parses, otherwise taken as a string. Throws ConfigError on malformed input.
void apply_overrides(nlohmann::json& doc, const std::vector<std::string>& assignments);

} // namespace skyshield
