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

#include "risjam/asymptotics.hpp"
#include "risjam/config.hpp"
#include "risjam/wmmse.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace risjam
{

constexpr int kSchemaVersion = 1;

struct ResultRow
{
    std::string scheme;
    std::string sweep;        // swept parameter name
    double sweep_value = 0.0;
    long trial = 0;
    std::uint64_t seed = 0;   // trial seed
    std::uint64_t channel_hash = 0;
    double rate_nats = 0.0;   // secrecy rate of the scheme
    double rate_bits = 0.0;
    double sensing_nats = 0.0; // ISAC only
    std::string branch;       // EJ branch, or the mode that produced the point
    int iterations = 0;
    bool converged = false;
    std::string error;        // empty when the optimizer succeeded
    double wall_s = 0.0;
};

// Final precoders and phases behind one row
struct StoredSolution
{
    std::string scheme;
    double sweep_value = 0.0;
    long trial = 0;
    ComplexMatrix F1;
    ComplexMatrix F2;
    PhaseVector phi;
};

struct RunOptions
{
    int workers = 1;
    bool persist_solutions = false;
};

struct RunOutput
{
    std::vector<ResultRow> rows; // sorted by sweep point, trial, then scheme order of the config
    std::vector<StoredSolution> solutions;
};

// Seed of trial t; every scheme and sweep point of the trial uses it
std::uint64_t trial_seed(const ScenarioConfig &cfg, long trial);

// Channels of a (sweep point, trial) pair
RawChannels trial_channels(const ScenarioConfig &cfg, const Dims &dims, std::uint64_t seed);

// Dims at a sweep point
Dims sweep_dims(const ScenarioConfig &cfg, double value);

// Runs every scheme on each realization. ISAC sweeps alpha1 over the weight grid.
// Optimizer exceptions are recorded in the row's error column.
RunOutput run_scenario(const ScenarioConfig &cfg, const RunOptions &opt = {});

std::string csv_header();
void write_csv(std::ostream &os, const std::vector<ResultRow> &rows);
std::vector<ResultRow> read_csv(std::istream &is);

// Removes the trailing wall-time column from every line
std::string strip_timing(const std::string &csv);

struct SummaryRow
{
    std::string scheme;
    double sweep_value = 0.0;
    long n = 0;
    double mean = 0.0;
    double stderr_ = 0.0;
    double sensing_mean = 0.0;
    double sensing_stderr = 0.0;
};

// Mean and standard error per (scheme, sweep value); failed rows are skipped
std::vector<SummaryRow> summarize(std::vector<ResultRow> rows);
void write_summary_csv(std::ostream &os, const std::vector<SummaryRow> &s);

// Config echo, schema and code versions and the generator name, as JSON
std::string metadata_json(const ScenarioConfig &cfg, const RunOptions &opt);

void write_solutions(std::ostream &os, const std::vector<StoredSolution> &sols);
std::vector<StoredSolution> read_solutions(std::istream &is);

// Recomputes the row's rate (and sensing MI) from a stored solution
ResultRow reevaluate(const ScenarioConfig &cfg, const ResultRow &row, const StoredSolution &sol);

// results.csv, summary.csv, metadata.json and, when persisted, solutions.txt
void write_run(const std::string &dir, const ScenarioConfig &cfg, const RunOptions &opt, const RunOutput &out);

// asymptotic experiment
std::vector<DominanceEstimate> run_asymptotic(const ScenarioConfig &cfg, int workers = 1);
void write_asymptotic_csv(std::ostream &os, const std::vector<DominanceEstimate> &est);

} // namespace risjam
