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

#include <json.hpp>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

namespace skyshield {

using Cell = std::variant<double, std::int64_t, std::string>;

// Rectangular table of sweep results: one row per sweep point and scheme.
class SweepTable {
public:
    explicit SweepTable(std::vector<std::string> columns);

    const std::vector<std::string>& columns() const noexcept { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }
    std::size_t size() const noexcept { return rows_.size(); }

    // Throws std::invalid_argument if the row width does not match.
    void add_row(std::vector<Cell> row);

    std::size_t column_index(const std::string& name) const;
    double number(std::size_t row, const std::string& column) const;
    std::string text(std::size_t row, const std::string& column) const;

    // Header line then one line per row, '\n' terminated. Doubles use the
    // shortest representation that round-trips.
    std::string to_csv() const;
    // Array of {column: value} objects.
    nlohmann::json rows_json() const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

std::string format_double(double v);

// {config_echo, rows, artifact_version, wall_time_s}
nlohmann::json result_envelope(const nlohmann::json& config_echo, const SweepTable& table, double wall_time_s);

} // namespace skyshield
