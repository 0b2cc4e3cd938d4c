// SPDX-License-Identifier: Apache-2.0
//
// risjam: secrecy-rate optimization for RIS-assisted cooperative jamming
// Copyright (C) 2026 The risjam authors
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

#include "risjam/config.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace risjam
{

namespace
{
std::string trim(const std::string &s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string join(const std::vector<double> &v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + fmt(v[i]);
    return s;
}

Point2 parse_point(const std::string &s)
{
    const std::vector<double> v = parse_list(s);
    if (v.size() != 2)
        throw std::invalid_argument("expected a point \"x,y\", got \"" + s + "\"");
    return {v[0], v[1]};
}

const std::set<std::string> &known_keys()
{
    static const std::set<std::string> k{
        "kind", "channel", "bs", "jammer", "ris", "ue", "eve", "exp_to_ris", "exp_from_ris", "exp_direct", "c0",
        "d0", "rician", "nb", "nc", "nu", "ne", "m", "sweep", "sweep_values", "power_dbm", "jammer_offset_db",
        "noise_dbm", "trials", "seed", "schemes", "delta", "max_outer", "restarts", "mm_max", "randomizations",
        "pilots", "alpha_step", "dft_pilots", "m_list"};
    return k;
}
} // namespace

KeyValues KeyValues::parse(std::istream &in)
{
    KeyValues kv;
    std::string line;
    int n = 0;
    while (std::getline(in, line))
    {
        ++n;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(n) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        if (key.empty())
            throw std::invalid_argument("config line " + std::to_string(n) + ": empty key");
        kv.set(key, trim(line.substr(eq + 1)));
    }
    return kv;
}

KeyValues KeyValues::load(const std::string &path)
{
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot open config " + path);
    return parse(f);
}

std::string KeyValues::get(const std::string &key, const std::string &fallback) const
{
    auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
}

double KeyValues::get_double(const std::string &key, double fallback) const
{
    auto it = kv_.find(key);
    if (it == kv_.end())
        return fallback;
    std::size_t used = 0;
    const double v = std::stod(it->second, &used);
    if (used != it->second.size())
        throw std::invalid_argument("key " + key + ": not a number");
    return v;
}

long KeyValues::get_long(const std::string &key, long fallback) const
{
    auto it = kv_.find(key);
    if (it == kv_.end())
        return fallback;
    std::size_t used = 0;
    const long v = std::stol(it->second, &used);
    if (used != it->second.size())
        throw std::invalid_argument("key " + key + ": not an integer");
    return v;
}

bool KeyValues::get_bool(const std::string &key, bool fallback) const
{
    auto it = kv_.find(key);
    if (it == kv_.end())
        return fallback;
    if (it->second == "true" || it->second == "1")
        return true;
    if (it->second == "false" || it->second == "0")
        return false;
    throw std::invalid_argument("key " + key + ": expected true or false");
}

std::vector<double> KeyValues::get_list(const std::string &key, const std::vector<double> &fallback) const
{
    auto it = kv_.find(key);
    return it == kv_.end() ? fallback : parse_list(it->second);
}

std::vector<double> parse_list(const std::string &s)
{
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        item = trim(item);
        if (item.empty())
            continue;
        std::size_t used = 0;
        out.push_back(std::stod(item, &used));
        if (used != item.size())
            throw std::invalid_argument("bad list entry \"" + item + "\"");
    }
    return out;
}

std::string to_string(Experiment e)
{
    switch (e)
    {
    case Experiment::miso:
        return "miso";
    case Experiment::mimo:
        return "mimo";
    case Experiment::mimo_no_ris:
        return "mimo-no-ris";
    case Experiment::isac:
        return "isac";
    case Experiment::asymptotic:
        return "asymptotic";
    }
    return "?";
}

Experiment experiment_from_string(const std::string &s)
{
    for (Experiment e : {Experiment::miso, Experiment::mimo, Experiment::mimo_no_ris, Experiment::isac,
                         Experiment::asymptotic})
        if (to_string(e) == s)
            return e;
    throw std::invalid_argument("unknown experiment kind \"" + s + "\"");
}

std::string to_string(SchemeId s)
{
    switch (s)
    {
    case SchemeId::ej:
        return "EJ";
    case SchemeId::gn:
        return "GN";
    case SchemeId::gn_ran:
        return "GN-Ran";
    case SchemeId::no_jammer:
        return "No-jammer";
    }
    return "?";
}

SchemeId scheme_id_from_string(const std::string &s)
{
    for (SchemeId id : {SchemeId::ej, SchemeId::gn, SchemeId::gn_ran, SchemeId::no_jammer})
        if (to_string(id) == s)
            return id;
    throw std::invalid_argument("unknown scheme \"" + s + "\"");
}

void ScenarioConfig::validate() const
{
    dims.validate();
    if (channel == ChannelModel::geometric)
        topo.validate();
    if (trials < 1)
        throw std::domain_error("config: trials must be >= 1");
    if (sweep_values.empty())
        throw std::domain_error("config: empty sweep");
    if (sweep != "power")
    {
        if (sweep != "nb" && sweep != "nc" && sweep != "nu" && sweep != "ne" && sweep != "m")
            throw std::domain_error("config: unknown sweep parameter " + sweep);
        for (double v : sweep_values)
            if (v != std::floor(v) || v < (sweep == "m" ? 0.0 : 1.0))
                throw std::domain_error("config: antenna sweep values must be counts");
    }
    if (schemes.empty())
        throw std::domain_error("config: no schemes");
    if (kind == Experiment::miso && (dims.nu != 1 || dims.ne != 1 || sweep == "nu" || sweep == "ne"))
        throw std::domain_error("config: miso needs Nu = Ne = 1");
    if (kind == Experiment::mimo_no_ris && (dims.m != 0 || sweep == "m"))
        throw std::domain_error("config: mimo-no-ris needs M = 0");
    if (kind == Experiment::isac)
    {
        if (dims.m != 0)
            throw std::domain_error("config: isac runs without RIS (M = 0)");
        if (pilots < 1 || !(alpha_step > 0.0 && alpha_step <= 1.0))
            throw std::domain_error("config: bad pilot length or weight step");
        for (SchemeId s : schemes)
            if (s != SchemeId::ej && s != SchemeId::gn)
                throw std::domain_error("config: isac supports EJ and GN only");
    }
    if (kind == Experiment::asymptotic)
        for (double v : m_list)
            if (v < 1.0 || v != std::floor(v))
                throw std::domain_error("config: m_list entries must be counts >= 1");
    if (!(delta > 0.0) || max_outer < 1 || restarts < 1 || mm_max < 0 || randomizations < 1)
        throw std::domain_error("config: bad optimizer override");
}

double ScenarioConfig::budget_bs(double sweep_power) const
{
    const double p = sweep == "power" ? sweep_power : power_dbm;
    return channel == ChannelModel::iid ? std::pow(10.0, p / 10.0) : dbm_to_watts(p);
}

double ScenarioConfig::budget_jammer(double sweep_power) const
{
    const double p = (sweep == "power" ? sweep_power : power_dbm) + jammer_offset_db;
    return channel == ChannelModel::iid ? std::pow(10.0, p / 10.0) : dbm_to_watts(p);
}

ScenarioConfig config_from_keys(const KeyValues &kv)
{
    for (const auto &[k, v] : kv.entries())
        if (!known_keys().count(k))
            throw std::invalid_argument("unknown config key \"" + k + "\"");
    ScenarioConfig c;
    c.kind = experiment_from_string(kv.get("kind", "mimo"));
    const bool iid_default = c.kind == Experiment::mimo_no_ris || c.kind == Experiment::isac;
    const std::string ch = kv.get("channel", iid_default ? "iid" : "geometric");
    if (ch == "iid")
        c.channel = ChannelModel::iid;
    else if (ch == "geometric")
        c.channel = ChannelModel::geometric;
    else
        throw std::invalid_argument("unknown channel model \"" + ch + "\"");
    if (kv.has("bs"))
        c.topo.bs = parse_point(kv.get("bs", ""));
    if (kv.has("jammer"))
        c.topo.jammer = parse_point(kv.get("jammer", ""));
    if (kv.has("ris"))
        c.topo.ris = parse_point(kv.get("ris", ""));
    if (kv.has("ue"))
        c.topo.ue = parse_point(kv.get("ue", ""));
    if (kv.has("eve"))
        c.topo.eve = parse_point(kv.get("eve", ""));
    c.topo.exp_to_ris = kv.get_double("exp_to_ris", c.topo.exp_to_ris);
    c.topo.exp_from_ris = kv.get_double("exp_from_ris", c.topo.exp_from_ris);
    c.topo.exp_direct = kv.get_double("exp_direct", c.topo.exp_direct);
    c.topo.c0 = kv.get_double("c0", c.topo.c0);
    c.topo.d0 = kv.get_double("d0", c.topo.d0);
    c.topo.rician = kv.get_double("rician", c.topo.rician);

    const bool scalar = c.kind == Experiment::miso;
    c.dims.nb = kv.get_long("nb", 2);
    c.dims.nc = kv.get_long("nc", 4);
    c.dims.nu = kv.get_long("nu", scalar ? 1 : 2);
    c.dims.ne = kv.get_long("ne", scalar ? 1 : 2);
    c.dims.m = kv.get_long("m", c.kind == Experiment::mimo ? 50 : (scalar ? 32 : 0));

    c.sweep = kv.get("sweep", "power");
    c.power_dbm = kv.get_double("power_dbm", c.channel == ChannelModel::iid ? 10.0 : 20.0);
    c.sweep_values = kv.get_list("sweep_values", {c.power_dbm});
    c.jammer_offset_db = kv.get_double("jammer_offset_db", 0.0);
    c.noise_dbm = kv.get_double("noise_dbm", -100.0);
    c.trials = kv.get_long("trials", 50);
    c.seed = std::uint64_t(kv.get_long("seed", 1));
    if (kv.has("schemes"))
    {
        c.schemes.clear();
        std::stringstream ss(kv.get("schemes", ""));
        std::string item;
        while (std::getline(ss, item, ','))
            if (!trim(item).empty())
                c.schemes.push_back(scheme_id_from_string(trim(item)));
    }
    c.delta = kv.get_double("delta", c.delta);
    c.max_outer = int(kv.get_long("max_outer", c.max_outer));
    c.restarts = int(kv.get_long("restarts", c.restarts));
    c.mm_max = int(kv.get_long("mm_max", c.mm_max));
    c.randomizations = int(kv.get_long("randomizations", c.randomizations));
    c.pilots = kv.get_long("pilots", c.pilots);
    c.alpha_step = kv.get_double("alpha_step", c.alpha_step);
    c.dft_pilots = kv.get_bool("dft_pilots", c.dft_pilots);
    c.m_list = kv.get_list("m_list", c.m_list);
    c.validate();
    return c;
}

KeyValues config_to_keys(const ScenarioConfig &c)
{
    KeyValues kv;
    auto pt = [](const Point2 &p) { return fmt(p.x) + "," + fmt(p.y); };
    kv.set("kind", to_string(c.kind));
    kv.set("channel", c.channel == ChannelModel::iid ? "iid" : "geometric");
    kv.set("bs", pt(c.topo.bs));
    kv.set("jammer", pt(c.topo.jammer));
    kv.set("ris", pt(c.topo.ris));
    kv.set("ue", pt(c.topo.ue));
    kv.set("eve", pt(c.topo.eve));
    kv.set("exp_to_ris", fmt(c.topo.exp_to_ris));
    kv.set("exp_from_ris", fmt(c.topo.exp_from_ris));
    kv.set("exp_direct", fmt(c.topo.exp_direct));
    kv.set("c0", fmt(c.topo.c0));
    kv.set("d0", fmt(c.topo.d0));
    kv.set("rician", fmt(c.topo.rician));
    kv.set("nb", std::to_string(c.dims.nb));
    kv.set("nc", std::to_string(c.dims.nc));
    kv.set("nu", std::to_string(c.dims.nu));
    kv.set("ne", std::to_string(c.dims.ne));
    kv.set("m", std::to_string(c.dims.m));
    kv.set("sweep", c.sweep);
    kv.set("sweep_values", join(c.sweep_values));
    kv.set("power_dbm", fmt(c.power_dbm));
    kv.set("jammer_offset_db", fmt(c.jammer_offset_db));
    kv.set("noise_dbm", fmt(c.noise_dbm));
    kv.set("trials", std::to_string(c.trials));
    kv.set("seed", std::to_string(c.seed));
    std::string s;
    for (std::size_t i = 0; i < c.schemes.size(); ++i)
        s += (i ? "," : "") + to_string(c.schemes[i]);
    kv.set("schemes", s);
    kv.set("delta", fmt(c.delta));
    kv.set("max_outer", std::to_string(c.max_outer));
    kv.set("restarts", std::to_string(c.restarts));
    kv.set("mm_max", std::to_string(c.mm_max));
    kv.set("randomizations", std::to_string(c.randomizations));
    kv.set("pilots", std::to_string(c.pilots));
    kv.set("alpha_step", fmt(c.alpha_step));
    kv.set("dft_pilots", c.dft_pilots ? "true" : "false");
    kv.set("m_list", join(c.m_list));
    return kv;
}

void apply_paper_scale(ScenarioConfig &cfg)
{
    cfg.trials = 1000;
    if (cfg.kind == Experiment::isac)
        cfg.alpha_step = 0.01;
    if (cfg.kind == Experiment::asymptotic)
        cfg.m_list = {4, 16, 64, 256, 1024};
}

} // namespace risjam
