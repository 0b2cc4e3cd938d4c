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

#pragma once

#include "risjam/channel.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace risjam
{

// Flat "key = value" text; '#' starts a comment, blank lines are ignored.
class KeyValues
{
  public:
    static KeyValues parse(std::istream &in);
    static KeyValues load(const std::string &path);

    void set(const std::string &key, const std::string &value) { kv_[key] = value; }
    bool has(const std::string &key) const { return kv_.count(key) != 0; }
    const std::map<std::string, std::string> &entries() const { return kv_; }

    std::string get(const std::string &key, const std::string &fallback) const;
    double get_double(const std::string &key, double fallback) const;
    long get_long(const std::string &key, long fallback) const;
    bool get_bool(const std::string &key, bool fallback) const;
    std::vector<double> get_list(const std::string &key, const std::vector<double> &fallback) const;

  private:
    std::map<std::string, std::string> kv_;
};

std::vector<double> parse_list(const std::string &s);

enum class Experiment
{
    miso,
    mimo,
    mimo_no_ris,
    isac,
    asymptotic
};

enum class SchemeId
{
    ej,
    gn,
    gn_ran,
    no_jammer
};

std::string to_string(Experiment e);
Experiment experiment_from_string(const std::string &s);
std::string to_string(SchemeId s);
SchemeId scheme_id_from_string(const std::string &s);

enum class ChannelModel
{
    geometric, // path loss, Rician RIS links, noise normalization
    iid        // all blocks CN(0,1), unit noise
};

struct ScenarioConfig
{
    Experiment kind = Experiment::mimo;
    ChannelModel channel = ChannelModel::geometric;
    Topology topo;
    Dims dims{2, 4, 2, 2, 50};

    // Sweep over "power" (BS dBm, or dB for iid channels) or one of nb, nc, nu, ne, m
    std::string sweep = "power";
    std::vector<double> sweep_values{20.0};
    double power_dbm = 20.0;  // used when power is not swept
    double jammer_offset_db = 0.0; // jammer power relative to the BS
    double noise_dbm = -100.0;

    long trials = 50;
    std::uint64_t seed = 1;
    std::vector<SchemeId> schemes{SchemeId::ej, SchemeId::gn};

    // Optimizer overrides
    double delta = 1e-4;
    int max_outer = 200;
    int restarts = 1;
    int mm_max = 50;
    int randomizations = 1000;

    // ISAC
    Index pilots = 16;
    double alpha_step = 0.1;
    bool dft_pilots = false;

    // Asymptotic
    std::vector<double> m_list{4, 16, 64, 256, 1024};

    // Throws std::domain_error on invalid combinations
    void validate() const;

    // Budgets in the units the channels were normalized to
    double budget_bs(double sweep_power) const;
    double budget_jammer(double sweep_power) const;
};

// Unknown keys throw std::invalid_argument so typos do not pass silently
ScenarioConfig config_from_keys(const KeyValues &kv);

// Echo of every field, in a fixed order
KeyValues config_to_keys(const ScenarioConfig &cfg);

// Trials 1000, ISAC weight step 0.01 and the full antenna sweeps
void apply_paper_scale(ScenarioConfig &cfg);

} // namespace risjam
