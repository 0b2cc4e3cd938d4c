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

#include "CLI11.hpp"
#include "oracles.hpp"
#include "risjam/harness.hpp"
#include "risjam/isac.hpp"
#include "risjam/verify.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

using namespace risjam;

namespace
{
struct Common
{
    std::string config;
    std::vector<std::string> set;
    long seed = -1;
    long trials = -1;
    std::string out = "out";
    int workers = int(std::max(1u, std::thread::hardware_concurrency()));
    bool paper_scale = false;
};

void add_common(CLI::App *sub, Common &c, bool need_config)
{
    auto *opt = sub->add_option("--config", c.config, "Key/value scenario file");
    if (need_config)
        opt->required();
    sub->add_option("--set", c.set, "Override a config key (key=value), repeatable");
    sub->add_option("--seed", c.seed, "Base seed");
    sub->add_option("--trials", c.trials, "Monte Carlo trials per sweep point");
    sub->add_option("--out", c.out, "Output directory");
    sub->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--paper-scale", c.paper_scale, "Full trial counts and weight grid");
}

ScenarioConfig load(const Common &c, const std::string &kind)
{
    KeyValues kv = c.config.empty() ? KeyValues{} : KeyValues::load(c.config);
    if (!kind.empty())
        kv.set("kind", kind);
    for (const std::string &s : c.set)
    {
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--set expects key=value, got " + s);
        kv.set(s.substr(0, eq), s.substr(eq + 1));
    }
    ScenarioConfig cfg = config_from_keys(kv);
    if (c.paper_scale)
        apply_paper_scale(cfg);
    if (c.seed >= 0)
        cfg.seed = std::uint64_t(c.seed);
    if (c.trials > 0)
        cfg.trials = c.trials;
    cfg.validate();
    return cfg;
}

void print_summary(const std::vector<SummaryRow> &s)
{
    write_summary_csv(std::cout, s);
}

int simulate(const Common &c, bool persist, const std::string &forced_kind)
{
    const ScenarioConfig cfg = load(c, forced_kind);
    const RunOptions opt{c.workers, persist};
    if (cfg.kind == Experiment::asymptotic)
    {
        const std::vector<DominanceEstimate> est = run_asymptotic(cfg, c.workers);
        std::filesystem::create_directories(c.out);
        std::ofstream f(std::filesystem::path(c.out) / "asymptotic.csv");
        write_asymptotic_csv(f, est);
        std::ofstream m(std::filesystem::path(c.out) / "metadata.json");
        m << metadata_json(cfg, opt);
        write_asymptotic_csv(std::cout, est);
        return 0;
    }
    const RunOutput out = run_scenario(cfg, opt);
    write_run(c.out, cfg, opt, out);
    print_summary(summarize(out.rows));
    long failed = 0;
    for (const ResultRow &r : out.rows)
        failed += r.error.empty() ? 0 : 1;
    if (failed > 0)
        std::cerr << failed << " rows recorded optimizer errors\n";
    return 0;
}

int pareto(const Common &c, double step)
{
    Common cc = c;
    if (step > 0.0)
        cc.set.push_back("alpha_step=" + std::to_string(step));
    const ScenarioConfig cfg = load(cc, "isac");
    const RunOptions opt{c.workers, false};
    const RunOutput out = run_scenario(cfg, opt);
    write_run(c.out, cfg, opt, out);

    // frontier of the per-weight means, one per scheme
    std::ofstream f(std::filesystem::path(c.out) / "frontier.csv");
    f << "scheme,alpha1,R_c,R_s,on_frontier\n";
    const std::vector<SummaryRow> s = summarize(out.rows);
    for (SchemeId id : cfg.schemes)
    {
        std::vector<ParetoPoint> pts;
        for (const SummaryRow &r : s)
            if (r.scheme == to_string(id))
                pts.push_back(ParetoPoint{r.sweep_value, r.mean, r.sensing_mean});
        const std::vector<ParetoPoint> keep = pareto_filter(pts);
        for (const ParetoPoint &p : pts)
        {
            bool on = false;
            for (const ParetoPoint &k : keep)
                on = on || k.alpha1 == p.alpha1;
            f.precision(17);
            f << to_string(id) << ',' << p.alpha1 << ',' << p.R_c << ',' << p.R_s << ',' << (on ? 1 : 0) << '\n';
        }
    }
    print_summary(s);
    return 0;
}

int verify(double scale)
{
    bool ok = true;
    for (const CheckResult &r : run_invariant_suite(scale))
    {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << " [" << r.seconds << " s]\n";
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}

// Brute-force reference values consumed by the test suite
int run_oracles(const std::string &path)
{
    nlohmann::json j;
    j["generator"] = Rng::kAlgorithm;
    // scalar GN: 200 x 200 power grid on the 1x1x1x1 instances build_iid_scenario(dims, 300 + s), P = 10
    nlohmann::json grid = nlohmann::json::array();
    for (std::uint64_t s = 0; s < 20; ++s)
    {
        const RawChannels raw = build_iid_scenario(Dims{1, 1, 1, 1, 0}, 300 + s);
        cd h1, h2, g1, g2;
        oracle::siso_gains(raw, PhaseVector(0), h1, h2, g1, g2);
        const oracle::GridMax g = oracle::scalar_gn_grid(h1, h2, g1, g2, 10.0, 10.0, 200);
        grid.push_back({{"seed", 300 + s}, {"value", g.value}, {"q1", g.q1}, {"q2", g.q2}});
    }
    j["scalar_gn_grid"] = grid;
    // sensing water-filling: R_hs of make_isac_problem(seed = 500 + s), T = 16, P1 = 10
    nlohmann::json wf = nlohmann::json::array();
    for (std::uint64_t s = 0; s < 20; ++s)
    {
        const IsacProblem p = make_isac_problem(Dims{4, 4, 2, 2, 0}, 16, 10.0, 10.0, 0.0, 500 + s);
        wf.push_back({{"seed", 500 + s}, {"value", oracle::waterfill_sensing(p.R_hs, 16.0, 10.0)}});
    }
    j["waterfill_sensing"] = wf;
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot write " + path);
    f << j.dump(2) << '\n';
    std::cout << "wrote " << path << '\n';
    return 0;
}
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Secrecy-rate optimization for RIS-assisted cooperative jamming"};
    app.require_subcommand(1);

    Common sim;
    bool persist = false;
    auto *s = app.add_subcommand("simulate", "Monte Carlo run of a scenario config");
    add_common(s, sim, true);
    s->add_flag("--persist-solutions", persist, "Store final precoders and phases");

    Common par;
    double step = -1.0;
    auto *p = app.add_subcommand("pareto", "ISAC weight sweep and frontier");
    add_common(p, par, false);
    p->add_option("--alpha-step", step, "Weight grid step");

    Common asy;
    std::vector<long> m_list;
    long nu = 1;
    auto *a = app.add_subcommand("asymptotic", "Dominance probability versus RIS size");
    add_common(a, asy, false);
    a->add_option("--m-list", m_list, "RIS sizes")->delimiter(',');
    a->add_option("--nu", nu, "Receive antennas");

    double scale = 1.0;
    auto *v = app.add_subcommand("verify", "Run the invariant suite");
    v->add_option("--scale", scale, "Instance-count multiplier")->check(CLI::PositiveNumber);

    std::string oracle_out = "oracles.json";
    auto *o = app.add_subcommand("oracle", "Compute brute-force reference values");
    o->add_option("--out", oracle_out, "Output file");

    CLI11_PARSE(app, argc, argv);
    try
    {
        if (*s)
            return simulate(sim, persist, "");
        if (*p)
            return pareto(par, step);
        if (*a)
        {
            if (!m_list.empty())
            {
                std::string l;
                for (std::size_t i = 0; i < m_list.size(); ++i)
                    l += (i ? "," : "") + std::to_string(m_list[i]);
                asy.set.push_back("m_list=" + l);
            }
            asy.set.push_back("nu=" + std::to_string(nu));
            asy.set.push_back("m=0");
            return simulate(asy, false, "asymptotic");
        }
        if (*v)
            return verify(scale);
        if (*o)
            return run_oracles(oracle_out);
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
