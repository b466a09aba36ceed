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

#include "skyshield/sweep_table.hpp"

#include "skyshield/version.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace skyshield {

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v < 0 ? "-inf" : "inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

SweepTable::SweepTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void SweepTable::add_row(std::vector<Cell> row)
{
    if (row.size() != columns_.size())
        throw std::invalid_argument("row has " + std::to_string(row.size()) + " cells, table has " +
                                    std::to_string(columns_.size()) + " columns");
    rows_.push_back(std::move(row));
}

std::size_t SweepTable::column_index(const std::string& name) const
{
    const auto it = std::find(columns_.begin(), columns_.end(), name);
    if (it == columns_.end())
        throw std::out_of_range("no column '" + name + "'");
    return static_cast<std::size_t>(it - columns_.begin());
}

double SweepTable::number(std::size_t row, const std::string& column) const
{
    const Cell& c = rows_.at(row).at(column_index(column));
    if (const auto* d = std::get_if<double>(&c))
        return *d;
    if (const auto* i = std::get_if<std::int64_t>(&c))
        return static_cast<double>(*i);
    throw std::invalid_argument("column '" + column + "' is not numeric");
}

std::string SweepTable::text(std::size_t row, const std::string& column) const
{
    const Cell& c = rows_.at(row).at(column_index(column));
    if (const auto* s = std::get_if<std::string>(&c))
        return *s;
    throw std::invalid_argument("column '" + column + "' is not text");
}

std::string SweepTable::to_csv() const
{
    std::string out;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i)
            out += ',';
        out += columns_[i];
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += ',';
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>)
                        out += format_double(v);
                    else if constexpr (std::is_same_v<T, std::int64_t>)
                        out += std::to_string(v);
                    else
                        out += v;
                },
                row[i]);
        }
        out += '\n';
    }
    return out;
}

nlohmann::json SweepTable::rows_json() const
{
    auto arr = nlohmann::json::array();
    for (const auto& row : rows_) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size(); ++i)
            std::visit([&](const auto& v) { obj[columns_[i]] = v; }, row[i]);
        arr.push_back(std::move(obj));
    }
    return arr;
}

nlohmann::json result_envelope(const nlohmann::json& config_echo, const SweepTable& table, double wall_time_s)
{
    return {
        {"config_echo", config_echo},
        {"rows", table.rows_json()},
        {"artifact_version", kArtifactVersion},
        {"wall_time_s", wall_time_s},
    };
}

} // namespace skyshield
