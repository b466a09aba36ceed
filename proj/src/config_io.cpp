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

#include "skyshield/config_io.hpp"

#include "skyshield/error.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <set>

namespace skyshield {

using nlohmann::json;

namespace {

// Walks one JSON object, remembering which keys were read so leftovers can
// be reported as unknown fields.
class Reader {
public:
    Reader(const json& obj, std::string prefix) : obj_(obj), prefix_(std::move(prefix))
    {
        if (!obj_.is_object())
            throw ConfigError(prefix_.empty() ? "config" : prefix_, "expected a JSON object");
    }

    std::string path(const std::string& key) const { return prefix_.empty() ? key : prefix_ + "." + key; }

    const json* find(const std::string& key)
    {
        seen_.insert(key);
        auto it = obj_.find(key);
        return it == obj_.end() ? nullptr : &*it;
    }

    void number(const std::string& key, double& out)
    {
        if (const json* v = find(key))
            out = as_number(*v, path(key));
    }

    // Like number() but also accepts the strings "-inf" / "inf".
    void extended_number(const std::string& key, double& out)
    {
        const json* v = find(key);
        if (!v)
            return;
        if (v->is_string()) {
            const auto s = v->get<std::string>();
            if (s == "-inf")
                out = -std::numeric_limits<double>::infinity();
            else if (s == "inf")
                out = std::numeric_limits<double>::infinity();
            else
                throw ConfigError(path(key), "expected a number or \"-inf\", got \"" + s + "\"");
            return;
        }
        out = as_number(*v, path(key));
    }

    void integer(const std::string& key, int& out)
    {
        if (const json* v = find(key))
            out = as_int(*v, path(key));
    }

    void count(const std::string& key, std::uint64_t& out)
    {
        const json* v = find(key);
        if (!v)
            return;
        if (v->is_number_integer() && v->get<std::int64_t>() < 0)
            throw ConfigError(path(key), "must be >= 0");
        if (!v->is_number_unsigned() && !v->is_number_integer())
            throw ConfigError(path(key), "expected a non-negative integer");
        out = v->get<std::uint64_t>();
    }

    void boolean(const std::string& key, bool& out)
    {
        const json* v = find(key);
        if (!v)
            return;
        if (!v->is_boolean())
            throw ConfigError(path(key), "expected true or false");
        out = v->get<bool>();
    }

    void string(const std::string& key, std::string& out)
    {
        const json* v = find(key);
        if (!v)
            return;
        if (!v->is_string())
            throw ConfigError(path(key), "expected a string");
        out = v->get<std::string>();
    }

    void numbers(const std::string& key, std::vector<double>& out)
    {
        const json* v = find(key);
        if (!v)
            return;
        if (!v->is_array())
            throw ConfigError(path(key), "expected an array of numbers");
        out.clear();
        for (const auto& e : *v)
            out.push_back(as_number(e, path(key)));
    }

    void integers(const std::string& key, std::vector<int>& out)
    {
        const json* v = find(key);
        if (!v)
            return;
        if (!v->is_array())
            throw ConfigError(path(key), "expected an array of integers");
        out.clear();
        for (const auto& e : *v)
            out.push_back(as_int(e, path(key)));
    }

    void position(const std::string& key, Position& out)
    {
        const json* v = find(key);
        if (!v)
            return;
        if (!v->is_array() || v->size() != 3)
            throw ConfigError(path(key), "expected [x, y, z] in meters");
        out = {as_number((*v)[0], path(key)), as_number((*v)[1], path(key)), as_number((*v)[2], path(key))};
    }

    // Nested object reader, or nullopt-like null pointer when absent.
    std::unique_ptr<Reader> child(const std::string& key)
    {
        const json* v = find(key);
        if (!v)
            return nullptr;
        return std::make_unique<Reader>(*v, path(key));
    }

    void finish() const
    {
        for (auto it = obj_.begin(); it != obj_.end(); ++it)
            if (!seen_.count(it.key()))
                throw ConfigError(path(it.key()), "unknown field");
    }

private:
    static double as_number(const json& v, const std::string& where)
    {
        if (!v.is_number())
            throw ConfigError(where, "expected a number");
        return v.get<double>();
    }

    static int as_int(const json& v, const std::string& where)
    {
        if (!v.is_number_integer())
            throw ConfigError(where, "expected an integer");
        const auto x = v.get<std::int64_t>();
        if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
            throw ConfigError(where, "integer out of range");
        return static_cast<int>(x);
    }

    const json& obj_;
    std::string prefix_;
    std::set<std::string> seen_;
};

void read_header(Reader& r, Experiment expected)
{
    const json* version = r.find("schema_version");
    if (!version)
        throw ConfigError("schema_version", "required (current version is " + std::to_string(kSchemaVersion) + ")");
    if (!version->is_number_integer() || version->get<std::int64_t>() != kSchemaVersion)
        throw ConfigError("schema_version", "unsupported; expected " + std::to_string(kSchemaVersion));
    std::string name;
    r.string("experiment", name);
    if (!name.empty() && experiment_from_string(name) != expected)
        throw ConfigError("experiment", "config is for '" + name + "', not '" + to_string(expected) + "'");
}

json position_json(const Position& p) { return json::array({p.x, p.y, p.z}); }

json extended_number_json(double v)
{
    if (std::isinf(v))
        return v < 0 ? "-inf" : "inf";
    return v;
}

} // namespace

std::string to_string(Experiment e)
{
    switch (e) {
    case Experiment::ExpA:
        return "exp_a";
    case Experiment::ExpB:
        return "exp_b";
    case Experiment::BeamDemo:
        return "beam_demo";
    }
    return "unknown";
}

Experiment experiment_from_string(std::string_view name)
{
    std::string n(name);
    for (auto& c : n)
        if (c == '-')
            c = '_';
    for (auto e : {Experiment::ExpA, Experiment::ExpB, Experiment::BeamDemo})
        if (to_string(e) == n)
            return e;
    throw ConfigError("experiment", "unknown experiment '" + std::string(name) + "'");
}

ExpAConfig exp_a_from_json(const json& doc)
{
    ExpAConfig cfg;
    Reader r(doc, "");
    read_header(r, Experiment::ExpA);
    r.position("user", cfg.user);
    r.number("eve_x", cfg.eve_x);
    r.number("uav_altitude", cfg.uav_altitude);
    r.number("gamma0", cfg.gamma0);
    r.extended_number("p_j_dbm", cfg.p_j_dbm);
    r.numbers("p_u_sweep_dbm", cfg.p_u_sweep_dbm);
    if (auto s = r.child("search")) {
        s->number("lo", cfg.search.lo);
        s->number("hi", cfg.search.hi);
        s->number("step", cfg.search.step);
        s->finish();
    }
    if (const json* schemes = r.find("schemes")) {
        if (!schemes->is_array())
            throw ConfigError("schemes", "expected an array of scheme names");
        cfg.schemes.clear();
        for (const auto& s : *schemes) {
            if (!s.is_string())
                throw ConfigError("schemes", "expected scheme names as strings");
            cfg.schemes.push_back(exp_a_scheme_from_string(s.get<std::string>()));
        }
    }
    r.finish();
    validate(cfg);
    return cfg;
}

ExpBConfig exp_b_from_json(const json& doc)
{
    ExpBConfig cfg;
    Reader r(doc, "");
    read_header(r, Experiment::ExpB);
    r.number("cell_radius", cfg.cell_radius);
    r.integer("rings", cfg.rings);
    r.number("isd", cfg.isd);
    r.number("bs_height", cfg.bs_height);
    if (auto u = r.child("uav")) {
        u->number("horizontal_offset", cfg.uav_horizontal_offset);
        u->number("azimuth_deg", cfg.uav_azimuth_deg);
        u->number("altitude", cfg.uav_altitude);
        u->boolean("track_user", cfg.uav_track_user);
        u->finish();
    }
    if (auto p = r.child("pattern")) {
        p->number("downtilt_deg", cfg.pattern.downtilt_deg);
        p->number("theta3db_deg", cfg.pattern.theta3db_deg);
        p->number("max_attenuation_db", cfg.pattern.max_attenuation_db);
        p->boolean("enabled", cfg.pattern_enabled);
        p->finish();
    }
    r.number("gamma0_air", cfg.gamma0_air);
    r.number("gamma0_terrestrial", cfg.gamma0_terrestrial);
    r.number("alpha", cfg.alpha);
    std::string fading = cfg.fading == FadingLaw::Rayleigh ? "rayleigh" : "none";
    r.string("fading", fading);
    if (fading == "rayleigh")
        cfg.fading = FadingLaw::Rayleigh;
    else if (fading == "none")
        cfg.fading = FadingLaw::None;
    else
        throw ConfigError("fading", "expected \"rayleigh\" or \"none\", got \"" + fading + "\"");
    r.numbers("p_t_sweep_dbm", cfg.p_t_sweep_dbm);
    r.integers("n_jammers_sweep", cfg.n_jammers_sweep);
    r.count("trials", cfg.trials);
    r.count("seed", cfg.seed);
    std::string averaging = cfg.averaging == SecrecyAveraging::PerRealization ? "per_realization" : "clamp_of_means";
    r.string("secrecy_averaging", averaging);
    if (averaging == "per_realization")
        cfg.averaging = SecrecyAveraging::PerRealization;
    else if (averaging == "clamp_of_means")
        cfg.averaging = SecrecyAveraging::ClampOfMeans;
    else
        throw ConfigError("secrecy_averaging",
                          "expected \"per_realization\" or \"clamp_of_means\", got \"" + averaging + "\"");
    r.finish();
    validate(cfg);
    return cfg;
}

BeamDemoConfig beam_demo_from_json(const json& doc)
{
    BeamDemoConfig cfg;
    Reader r(doc, "");
    read_header(r, Experiment::BeamDemo);
    if (auto a = r.child("array")) {
        int nx = static_cast<int>(cfg.array.nx);
        int ny = static_cast<int>(cfg.array.ny);
        a->integer("nx", nx);
        a->integer("ny", ny);
        a->number("spacing", cfg.array.spacing);
        a->finish();
        if (nx < 1 || ny < 1)
            throw ConfigError("array", "nx and ny must be >= 1");
        cfg.array.nx = static_cast<std::size_t>(nx);
        cfg.array.ny = static_cast<std::size_t>(ny);
    }
    r.numbers("tx_altitudes", cfg.tx_altitudes);
    r.position("user", cfg.user);
    r.position("eve", cfg.eve);
    r.number("gamma0", cfg.gamma0);
    r.number("p_tx_dbm", cfg.p_tx_dbm);
    r.finish();
    validate(cfg);
    return cfg;
}

json to_json(const ExpAConfig& cfg)
{
    json schemes = json::array();
    for (auto s : cfg.schemes)
        schemes.push_back(to_string(s));
    return {
        {"schema_version", kSchemaVersion},
        {"experiment", to_string(Experiment::ExpA)},
        {"user", position_json(cfg.user)},
        {"eve_x", cfg.eve_x},
        {"uav_altitude", cfg.uav_altitude},
        {"gamma0", cfg.gamma0},
        {"p_j_dbm", extended_number_json(cfg.p_j_dbm)},
        {"p_u_sweep_dbm", cfg.p_u_sweep_dbm},
        {"search", {{"lo", cfg.search.lo}, {"hi", cfg.search.hi}, {"step", cfg.search.step}}},
        {"schemes", schemes},
    };
}

json to_json(const ExpBConfig& cfg)
{
    return {
        {"schema_version", kSchemaVersion},
        {"experiment", to_string(Experiment::ExpB)},
        {"cell_radius", cfg.cell_radius},
        {"rings", cfg.rings},
        {"isd", cfg.isd},
        {"bs_height", cfg.bs_height},
        {"uav",
         {{"horizontal_offset", cfg.uav_horizontal_offset},
          {"azimuth_deg", cfg.uav_azimuth_deg},
          {"altitude", cfg.uav_altitude},
          {"track_user", cfg.uav_track_user}}},
        {"pattern",
         {{"downtilt_deg", cfg.pattern.downtilt_deg},
          {"theta3db_deg", cfg.pattern.theta3db_deg},
          {"max_attenuation_db", cfg.pattern.max_attenuation_db},
          {"enabled", cfg.pattern_enabled}}},
        {"gamma0_air", cfg.gamma0_air},
        {"gamma0_terrestrial", cfg.gamma0_terrestrial},
        {"alpha", cfg.alpha},
        {"fading", cfg.fading == FadingLaw::Rayleigh ? "rayleigh" : "none"},
        {"p_t_sweep_dbm", cfg.p_t_sweep_dbm},
        {"n_jammers_sweep", cfg.n_jammers_sweep},
        {"trials", cfg.trials},
        {"seed", cfg.seed},
        {"secrecy_averaging",
         cfg.averaging == SecrecyAveraging::PerRealization ? "per_realization" : "clamp_of_means"},
    };
}

json to_json(const BeamDemoConfig& cfg)
{
    return {
        {"schema_version", kSchemaVersion},
        {"experiment", to_string(Experiment::BeamDemo)},
        {"array", {{"nx", cfg.array.nx}, {"ny", cfg.array.ny}, {"spacing", cfg.array.spacing}}},
        {"tx_altitudes", cfg.tx_altitudes},
        {"user", position_json(cfg.user)},
        {"eve", position_json(cfg.eve)},
        {"gamma0", cfg.gamma0},
        {"p_tx_dbm", cfg.p_tx_dbm},
    };
}

json load_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config", "cannot read '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config", "'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

void apply_overrides(json& doc, const std::vector<std::string>& assignments)
{
    for (const auto& a : assignments) {
        const auto eq = a.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ConfigError("--set", "expected key=value, got '" + a + "'");
        const std::string key = a.substr(0, eq);
        const std::string raw = a.substr(eq + 1);

        json value;
        try {
            value = json::parse(raw);
        } catch (const json::parse_error&) {
            value = raw;
        }

        json* node = &doc;
        std::size_t start = 0;
        while (true) {
            const auto dot = key.find('.', start);
            const std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
            if (part.empty())
                throw ConfigError(key, "empty path component in --set");
            if (!node->is_object())
                throw ConfigError(key, "cannot descend into a non-object value");
            if (dot == std::string::npos) {
                (*node)[part] = value;
                break;
            }
            node = &(*node)[part];
            if (node->is_null())
                *node = json::object();
            start = dot + 1;
        }
    }
}

} // namespace skyshield
