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

#include "risjam/harness.hpp"
#include "risjam/isac.hpp"
#include "risjam/miso_sdr.hpp"
#include "risjam/parallel.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace risjam
{

namespace
{
std::string num(double v)
{
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::string clean(std::string s)
{
    for (char &c : s)
        if (c == ',' || c == '\n' || c == '\r')
            c = ';';
    return s;
}

StopRule stop_rule(const ScenarioConfig &cfg)
{
    StopRule s;
    s.delta = cfg.delta;
    s.max_outer = cfg.max_outer;
    s.mm_max = cfg.mm_max;
    s.restarts = cfg.restarts;
    return s;
}

MisoStop miso_stop(const ScenarioConfig &cfg)
{
    MisoStop s;
    s.delta = cfg.delta;
    s.max_outer = std::min(cfg.max_outer, s.max_outer);
    s.randomizations = cfg.randomizations;
    return s;
}

struct Outcome
{
    ResultRow row;
    StoredSolution sol;
};

double scheme_rate(SchemeId id, const RateBundle &r)
{
    switch (id)
    {
    case SchemeId::ej:
        return r.r_ej;
    case SchemeId::no_jammer:
        return r.r_bar;
    default:
        return r.r_gn;
    }
}

// One communication scheme on one realization
SolutionRecord run_comm(const ScenarioConfig &cfg, SchemeId id, const RawChannels &raw, const Budgets &b,
                        std::uint64_t ts)
{
    InitSpec init;
    init.seed = derive_seed(ts, 1);
    if (id == SchemeId::gn_ran)
    {
        Rng rng(derive_seed(ts, 2));
        init.phi = random_phases(raw.dims.m, rng);
    }
    if (cfg.kind == Experiment::miso)
    {
        MisoStop st = miso_stop(cfg);
        const ConicSolverAdapter solver = bundled_solver();
        switch (id)
        {
        case SchemeId::ej:
            return alternating_miso(raw, b, Scheme::ej, solver, init, st);
        case SchemeId::gn:
            return alternating_miso(raw, b, Scheme::gn, solver, init, st);
        case SchemeId::gn_ran:
            st.optimize_phases = false;
            return alternating_miso_subproblem(raw, b, Subproblem::gn, solver, init, st);
        case SchemeId::no_jammer:
            return alternating_miso_subproblem(raw, Budgets{b.P1, 0.0}, Subproblem::bar, solver, init, st);
        }
    }
    StopRule st = stop_rule(cfg);
    switch (id)
    {
    case SchemeId::ej:
        return optimize_ej(raw, b, init, st);
    case SchemeId::gn:
        return optimize_subproblem(raw, b, Subproblem::gn, init, st);
    case SchemeId::gn_ran:
        st.optimize_phases = false;
        return optimize_subproblem(raw, b, Subproblem::gn, init, st);
    case SchemeId::no_jammer:
        return optimize_subproblem(raw, Budgets{b.P1, 0.0}, Subproblem::bar, init, st);
    }
    throw std::logic_error("run_comm: unreachable");
}

std::string branch_label(SchemeId id, const SolutionRecord &r)
{
    return id == SchemeId::ej ? to_string(r.rates.branch) : to_string(r.mode);
}

IsacProblem isac_problem(const ScenarioConfig &cfg, const Dims &d, double alpha1, std::uint64_t ts)
{
    IsacProblem p = make_isac_problem(d, cfg.pilots, cfg.budget_bs(cfg.sweep_values.front()),
                                      cfg.budget_jammer(cfg.sweep_values.front()), alpha1, ts);
    if (cfg.dft_pilots)
        p.S1 = dft_pilots(d.nb, cfg.pilots);
    return p;
}
} // namespace

std::uint64_t trial_seed(const ScenarioConfig &cfg, long trial)
{
    return derive_seed(cfg.seed, std::uint64_t(trial));
}

Dims sweep_dims(const ScenarioConfig &cfg, double value)
{
    Dims d = cfg.dims;
    const Index v = Index(std::llround(value));
    if (cfg.sweep == "nb")
        d.nb = v;
    else if (cfg.sweep == "nc")
        d.nc = v;
    else if (cfg.sweep == "nu")
        d.nu = v;
    else if (cfg.sweep == "ne")
        d.ne = v;
    else if (cfg.sweep == "m")
        d.m = v;
    return d;
}

RawChannels trial_channels(const ScenarioConfig &cfg, const Dims &dims, std::uint64_t seed)
{
    return cfg.channel == ChannelModel::iid ? build_iid_scenario(dims, seed)
                                            : build_scenario(cfg.topo, dims, cfg.noise_dbm, seed);
}

RunOutput run_scenario(const ScenarioConfig &cfg, const RunOptions &opt)
{
    cfg.validate();
    if (cfg.kind == Experiment::asymptotic)
        throw std::invalid_argument("run_scenario: use run_asymptotic for the asymptotic experiment");
    const bool isac = cfg.kind == Experiment::isac;
    const std::vector<double> points = isac ? alpha_grid(cfg.alpha_step) : cfg.sweep_values;
    const std::string sweep = isac ? "alpha1" : cfg.sweep;
    const std::size_t ns = cfg.schemes.size();
    const std::size_t tasks = points.size() * std::size_t(cfg.trials);
    std::vector<std::vector<Outcome>> results(tasks);

    parallel_for(tasks, opt.workers, [&](std::size_t task) {
        const double value = points[task / std::size_t(cfg.trials)];
        const long trial = long(task % std::size_t(cfg.trials));
        const std::uint64_t ts = trial_seed(cfg, trial);
        const Dims d = isac ? cfg.dims : sweep_dims(cfg, value);
        std::vector<Outcome> &out = results[task];
        out.resize(ns);

        std::uint64_t hash = 0;
        RawChannels raw;
        IsacProblem ip;
        if (isac)
        {
            ip = isac_problem(cfg, d, value, ts);
            hash = channel_hash(ip.ch.raw);
        }
        else
        {
            raw = trial_channels(cfg, d, ts);
            hash = channel_hash(raw);
        }
        const Budgets b{cfg.budget_bs(value), cfg.budget_jammer(value)};
        for (std::size_t k = 0; k < ns; ++k)
        {
            const SchemeId id = cfg.schemes[k];
            ResultRow &row = out[k].row;
            row.scheme = to_string(id);
            row.sweep = sweep;
            row.sweep_value = value;
            row.trial = trial;
            row.seed = ts;
            row.channel_hash = hash;
            const auto t0 = std::chrono::steady_clock::now();
            try
            {
                SolutionRecord r;
                if (isac)
                {
                    const IsacRecord ir = optimize_isac_scheme(ip, id == SchemeId::ej ? Scheme::ej : Scheme::gn);
                    r = ir.sol;
                    row.rate_nats = ir.R_c;
                    row.sensing_nats = ir.R_s;
                }
                else
                {
                    r = run_comm(cfg, id, raw, b, ts);
                    row.rate_nats = scheme_rate(id, r.rates);
                }
                row.branch = branch_label(id, r);
                row.iterations = r.iterations;
                row.converged = r.converged;
                out[k].sol = StoredSolution{row.scheme, value, trial, r.F1, r.F2, r.phi};
            }
            catch (const std::exception &e)
            {
                row.error = clean(e.what());
                row.rate_nats = 0.0;
                row.sensing_nats = 0.0;
            }
            row.rate_bits = row.rate_nats / std::log(2.0);
            row.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
    });

    RunOutput o;
    for (auto &task : results)
        for (Outcome &oc : task)
        {
            o.rows.push_back(oc.row);
            if (opt.persist_solutions && oc.row.error.empty())
                o.solutions.push_back(std::move(oc.sol));
        }
    return o;
}

std::string csv_header()
{
    return "schema_version,scheme,sweep,sweep_value,trial,seed,channel_hash,rate_nats,rate_bits,sensing_nats,"
           "branch,iterations,converged,error,wall_s";
}

void write_csv(std::ostream &os, const std::vector<ResultRow> &rows)
{
    os << csv_header() << '\n';
    for (const ResultRow &r : rows)
        os << kSchemaVersion << ',' << r.scheme << ',' << r.sweep << ',' << num(r.sweep_value) << ',' << r.trial
           << ',' << r.seed << ',' << r.channel_hash << ',' << num(r.rate_nats) << ',' << num(r.rate_bits) << ','
           << num(r.sensing_nats) << ',' << r.branch << ',' << r.iterations << ',' << (r.converged ? 1 : 0)
           << ',' << clean(r.error) << ',' << num(r.wall_s) << '\n';
}

std::vector<ResultRow> read_csv(std::istream &is)
{
    std::string line;
    if (!std::getline(is, line) || line != csv_header())
        throw std::invalid_argument("read_csv: header mismatch");
    std::vector<ResultRow> rows;
    while (std::getline(is, line))
    {
        if (line.empty())
            continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            f.push_back(cell);
        if (!line.empty() && line.back() == ',')
            f.emplace_back();
        if (f.size() != 15)
            throw std::invalid_argument("read_csv: expected 15 fields");
        if (std::stoi(f[0]) != kSchemaVersion)
            throw std::invalid_argument("read_csv: schema version mismatch");
        ResultRow r;
        r.scheme = f[1];
        r.sweep = f[2];
        r.sweep_value = std::stod(f[3]);
        r.trial = std::stol(f[4]);
        r.seed = std::stoull(f[5]);
        r.channel_hash = std::stoull(f[6]);
        r.rate_nats = std::stod(f[7]);
        r.rate_bits = std::stod(f[8]);
        r.sensing_nats = std::stod(f[9]);
        r.branch = f[10];
        r.iterations = std::stoi(f[11]);
        r.converged = f[12] == "1";
        r.error = f[13];
        r.wall_s = std::stod(f[14]);
        rows.push_back(r);
    }
    return rows;
}

std::string strip_timing(const std::string &csv)
{
    std::stringstream in(csv);
    std::string line, out;
    while (std::getline(in, line))
    {
        const auto c = line.rfind(',');
        out += (c == std::string::npos ? line : line.substr(0, c)) + '\n';
    }
    return out;
}

std::vector<SummaryRow> summarize(std::vector<ResultRow> rows)
{
    std::stable_sort(rows.begin(), rows.end(), [](const ResultRow &a, const ResultRow &b) {
        if (a.scheme != b.scheme)
            return a.scheme < b.scheme;
        if (a.sweep_value != b.sweep_value)
            return a.sweep_value < b.sweep_value;
        return a.trial < b.trial;
    });
    std::vector<SummaryRow> out;
    std::size_t i = 0;
    while (i < rows.size())
    {
        std::size_t j = i;
        SummaryRow s;
        s.scheme = rows[i].scheme;
        s.sweep_value = rows[i].sweep_value;
        double sum = 0.0, sum_s = 0.0;
        std::vector<double> v, vs;
        for (; j < rows.size() && rows[j].scheme == s.scheme && rows[j].sweep_value == s.sweep_value; ++j)
            if (rows[j].error.empty())
            {
                v.push_back(rows[j].rate_nats);
                vs.push_back(rows[j].sensing_nats);
                sum += rows[j].rate_nats;
                sum_s += rows[j].sensing_nats;
            }
        s.n = long(v.size());
        if (s.n > 0)
        {
            s.mean = sum / double(s.n);
            s.sensing_mean = sum_s / double(s.n);
        }
        if (s.n > 1)
        {
            double a = 0.0, b = 0.0;
            for (std::size_t k = 0; k < v.size(); ++k)
            {
                a += (v[k] - s.mean) * (v[k] - s.mean);
                b += (vs[k] - s.sensing_mean) * (vs[k] - s.sensing_mean);
            }
            s.stderr_ = std::sqrt(a / double(s.n - 1) / double(s.n));
            s.sensing_stderr = std::sqrt(b / double(s.n - 1) / double(s.n));
        }
        out.push_back(s);
        i = j;
    }
    return out;
}

void write_summary_csv(std::ostream &os, const std::vector<SummaryRow> &s)
{
    os << "scheme,sweep_value,n,mean_nats,stderr_nats,mean_bits,stderr_bits,sensing_mean,sensing_stderr\n";
    const double l2 = std::log(2.0);
    for (const SummaryRow &r : s)
        os << r.scheme << ',' << num(r.sweep_value) << ',' << r.n << ',' << num(r.mean) << ',' << num(r.stderr_)
           << ',' << num(r.mean / l2) << ',' << num(r.stderr_ / l2) << ',' << num(r.sensing_mean) << ','
           << num(r.sensing_stderr) << '\n';
}

std::string metadata_json(const ScenarioConfig &cfg, const RunOptions &opt)
{
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["code_version"] = RISJAM_VERSION;
    j["prng"] = Rng::kAlgorithm;
    j["seed_derivation"] = "splitmix64(seed, stream)";
    j["rate_unit"] = "nats";
    j["workers"] = opt.workers;
    j["persist_solutions"] = opt.persist_solutions;
    nlohmann::json c = nlohmann::json::object();
    const KeyValues kv = config_to_keys(cfg);
    for (const auto &[k, v] : kv.entries())
        c[k] = v;
    j["config"] = c;
    return j.dump(2) + "\n";
}

namespace
{
void put_matrix(std::ostream &os, const char *tag, const ComplexMatrix &A)
{
    os << tag << ' ' << A.rows() << ' ' << A.cols();
    for (Index j = 0; j < A.cols(); ++j)
        for (Index i = 0; i < A.rows(); ++i)
            os << ' ' << num(A(i, j).real()) << ' ' << num(A(i, j).imag());
    os << '\n';
}

ComplexMatrix get_matrix(std::istream &is, const std::string &tag)
{
    std::string t;
    Index r = 0, c = 0;
    if (!(is >> t >> r >> c) || t != tag || r < 0 || c < 0)
        throw std::invalid_argument("read_solutions: expected " + tag);
    ComplexMatrix A(r, c);
    for (Index j = 0; j < c; ++j)
        for (Index i = 0; i < r; ++i)
        {
            double re = 0.0, im = 0.0;
            if (!(is >> re >> im))
                throw std::invalid_argument("read_solutions: truncated " + tag);
            A(i, j) = cd(re, im);
        }
    return A;
}
} // namespace

void write_solutions(std::ostream &os, const std::vector<StoredSolution> &sols)
{
    os << "risjam-solutions " << kSchemaVersion << ' ' << sols.size() << '\n';
    for (const StoredSolution &s : sols)
    {
        os << "row " << s.scheme << ' ' << num(s.sweep_value) << ' ' << s.trial << '\n';
        put_matrix(os, "F1", s.F1);
        put_matrix(os, "F2", s.F2);
        put_matrix(os, "phi", s.phi);
    }
}

std::vector<StoredSolution> read_solutions(std::istream &is)
{
    std::string magic;
    int ver = 0;
    std::size_t n = 0;
    if (!(is >> magic >> ver >> n) || magic != "risjam-solutions" || ver != kSchemaVersion)
        throw std::invalid_argument("read_solutions: bad header");
    std::vector<StoredSolution> out(n);
    for (StoredSolution &s : out)
    {
        std::string tag;
        if (!(is >> tag >> s.scheme >> s.sweep_value >> s.trial) || tag != "row")
            throw std::invalid_argument("read_solutions: expected row");
        s.F1 = get_matrix(is, "F1");
        s.F2 = get_matrix(is, "F2");
        const ComplexMatrix p = get_matrix(is, "phi");
        s.phi = p.col(0);
        if (p.cols() != 1)
            throw std::invalid_argument("read_solutions: phi must be a column");
    }
    return out;
}

ResultRow reevaluate(const ScenarioConfig &cfg, const ResultRow &row, const StoredSolution &sol)
{
    ResultRow r = row;
    const SchemeId id = scheme_id_from_string(row.scheme);
    const std::uint64_t ts = trial_seed(cfg, row.trial);
    PrecoderPair p;
    p.F1 = sol.F1;
    p.F2 = sol.F2;
    p.P1 = sol.F1.squaredNorm();
    p.P2 = sol.F2.squaredNorm();
    if (cfg.kind == Experiment::isac)
    {
        const IsacProblem ip = isac_problem(cfg, cfg.dims, row.sweep_value, ts);
        const RateBundle b = rate_ej(ip.ch, p);
        r.rate_nats = id == SchemeId::ej ? b.r_ej : b.r_gn;
        r.sensing_nats = sensing_mi(sol.F1, ip.S1, ip.R_hs);
    }
    else
    {
        const RawChannels raw = trial_channels(cfg, sweep_dims(cfg, row.sweep_value), ts);
        r.rate_nats = scheme_rate(id, rate_ej(compose_effective(raw, sol.phi), p));
    }
    r.rate_bits = r.rate_nats / std::log(2.0);
    return r;
}

void write_run(const std::string &dir, const ScenarioConfig &cfg, const RunOptions &opt, const RunOutput &out)
{
    std::filesystem::create_directories(dir);
    auto open = [&](const std::string &name) {
        std::ofstream f(std::filesystem::path(dir) / name);
        if (!f)
            throw std::runtime_error("cannot write " + name + " in " + dir);
        return f;
    };
    {
        std::ofstream f = open("results.csv");
        write_csv(f, out.rows);
    }
    {
        std::ofstream f = open("summary.csv");
        write_summary_csv(f, summarize(out.rows));
    }
    {
        std::ofstream f = open("metadata.json");
        f << metadata_json(cfg, opt);
    }
    if (opt.persist_solutions)
    {
        std::ofstream f = open("solutions.txt");
        write_solutions(f, out.solutions);
    }
}

std::vector<DominanceEstimate> run_asymptotic(const ScenarioConfig &cfg, int workers)
{
    cfg.validate();
    std::vector<Index> ms;
    for (double m : cfg.m_list)
        ms.push_back(Index(std::llround(m)));
    return dominance_sweep(ms, cfg.dims.nu, cfg.trials, cfg.seed, workers);
}

void write_asymptotic_csv(std::ostream &os, const std::vector<DominanceEstimate> &est)
{
    os << "schema_version,m,nu,trials,dominated,p_hat,p_se,aligned_mean,aligned_se,pi4_m,g2_mean\n";
    for (const DominanceEstimate &e : est)
        os << kSchemaVersion << ',' << e.m << ',' << e.nu << ',' << e.trials << ',' << e.dominated << ','
           << num(e.p_hat) << ',' << num(e.p_se) << ',' << num(e.aligned_mean) << ',' << num(e.aligned_se) << ','
           << num(kPi / 4.0 * double(e.m)) << ',' << num(e.g2_mean) << '\n';
}

} // namespace risjam
