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

// Acceptance criteria 1-12. One PASS/FAIL line per criterion; exit status is
// the number of failures.

#include "oracles.hpp"
#include "risjam/asymptotics.hpp"
#include "risjam/harness.hpp"
#include "risjam/isac.hpp"
#include "risjam/miso_sdr.hpp"
#include "risjam/parallel.hpp"
#include "risjam/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

using namespace risjam;

namespace
{
// oracle::scalar_gn_grid(200 x 200, P1 = P2 = 10) on build_iid_scenario({1,1,1,1,0}, 300 + s)
const double kScalarGnGrid[20] = {0,
                                  0.92642832598941716,
                                  0,
                                  0,
                                  0.8722396936157204,
                                  1.3114554963890592,
                                  0,
                                  0,
                                  0.17785731272874639,
                                  1.297215555197279,
                                  0.71616189130289576,
                                  0,
                                  0,
                                  0.89130681030737868,
                                  0.9462943974782756,
                                  0.67021736938521503,
                                  1.1674348041679781,
                                  0.43398677710910144,
                                  2.330132012443257,
                                  1.3012927219510635};

// oracle::waterfill_sensing(R_hs, T = 16, P = 10) for make_isac_problem({4,4,2,2,0}, seed = 500 + s)
const double kWaterfill[20] = {10.706223229707721, 10.228134667752469, 12.648839212368523, 11.619342987332361,
                               11.549673237178745, 9.3591002018863865, 12.514348259872836, 11.817666759420563,
                               12.116007368907139, 10.319467327288256, 11.641258694744632, 13.874485566394634,
                               11.390865927016007, 11.152231529659865, 12.880231014013885, 12.718006162285247,
                               12.597085325440538, 13.196276329415996, 13.259502835237129, 11.897573100657926};

int workers()
{
    return int(std::max(1u, std::thread::hardware_concurrency()));
}

double since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void report(int id, const std::string &name, bool ok, const std::string &detail, double seconds)
{
    std::printf("%s %2d %s: %s [%.1f s]\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
    failures += ok ? 0 : 1;
}

void from_check(int id, const CheckResult &r, double budget_s = 0.0)
{
    bool ok = r.passed;
    std::string d = r.detail;
    if (budget_s > 0.0 && r.seconds >= budget_s)
    {
        ok = false;
        d += ", over the time budget";
    }
    report(id, r.name, ok, d, r.seconds);
}

std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

void criterion3()
{
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0, drift = 0.0;
    for (int s = 0; s < 20; ++s)
    {
        const RawChannels raw = build_iid_scenario(Dims{1, 1, 1, 1, 0}, std::uint64_t(300 + s));
        const SolutionRecord r = optimize_subproblem(raw, Budgets{10.0, 10.0}, Subproblem::gn, InitSpec{std::uint64_t(s)});
        worst = std::max(worst, std::abs(r.rates.r_gn - kScalarGnGrid[s]));
        const oracle::GridMax g =
            oracle::scalar_gn_grid(raw.H_bu(0, 0), raw.G_cu(0, 0), raw.H_be(0, 0), raw.G_ce(0, 0), 10.0, 10.0, 200);
        drift = std::max(drift, std::abs(g.value - kScalarGnGrid[s]));
    }
    const double t = since(t0);
    report(3, "scalar_oracle", worst <= 1e-2 && drift <= 1e-12 && t < 30.0,
           fmt("max |R_GN - grid| %.3g (limit 0.01), frozen-vs-live oracle %.1g", worst, drift), t);
}

void criterion8()
{
    const auto t0 = std::chrono::steady_clock::now();
    ScenarioConfig cfg;
    cfg.kind = Experiment::mimo;
    cfg.dims = Dims{2, 4, 1, 2, 50};
    cfg.sweep = "nu";
    cfg.sweep_values = {1, 2, 3, 4};
    cfg.trials = 50;
    cfg.seed = 8;
    cfg.schemes = {SchemeId::ej, SchemeId::gn};
    const RunOutput out = run_scenario(cfg, RunOptions{workers(), false});
    const std::vector<SummaryRow> s = summarize(out.rows);
    bool ok = true;
    std::ostringstream d;
    d.precision(4);
    for (double nu : cfg.sweep_values)
    {
        double ej = 0.0, gn = 0.0;
        for (const SummaryRow &r : s)
            if (r.sweep_value == nu)
                (r.scheme == "EJ" ? ej : gn) = r.mean;
        ok = ok && ej >= gn;
        d << "Nu=" << nu << " EJ " << ej << " GN " << gn << (ej >= gn ? "; " : " (EJ < GN); ");
    }
    long errors = 0;
    for (const ResultRow &r : out.rows)
        errors += r.error.empty() ? 0 : 1;
    d << errors << " failed rows";
    const double t = since(t0);
    report(8, "ris_mimo_ej_vs_gn", ok && errors == 0 && t < 1800.0, d.str(), t);
}

void criterion9()
{
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<DominanceEstimate> e = dominance_sweep({4, 16, 64, 256, 1024}, 1, 1000, 9, workers());
    bool mean_ok = true;
    std::ostringstream d;
    d.precision(4);
    for (const DominanceEstimate &x : e)
    {
        const bool m = std::abs(x.aligned_mean - kPi / 4.0 * double(x.m)) <= 3.0 * x.aligned_se;
        mean_ok = mean_ok && m;
        d << "p(" << x.m << ")=" << x.p_hat << (m ? "" : " mean off") << "; ";
    }
    const bool ok = e.back().p_hat >= 0.99 && e.back().p_hat > e.front().p_hat && mean_ok;
    d << "aligned means within 3 SE of (pi/4) M: " << (mean_ok ? "yes" : "no");
    const double t = since(t0);
    report(9, "asymptotic_dominance", ok && t < 120.0, d.str(), t);
}

void criterion10()
{
    const auto t0 = std::chrono::steady_clock::now();
    const int n = 20;
    const Dims dims{4, 4, 2, 2, 0};
    const std::vector<double> grid = alpha_grid(0.1);
    std::vector<double> comm_gap(n), sens_gap(n);
    std::vector<std::vector<ParetoPoint>> ej(n), gn(n);
    StopRule tight;
    tight.delta = 1e-6;
    tight.max_outer = 500;
    parallel_for(std::size_t(n), workers(), [&](std::size_t s) {
        const std::uint64_t seed = 500 + s;
        IsacProblem p = make_isac_problem(dims, 16, 10.0, 10.0, 1.0, seed);
        const IsacRecord c = optimize_isac_scheme(p, Scheme::ej);
        const SolutionRecord w = optimize_ej(p.ch.raw, Budgets{10.0, 10.0}, InitSpec{}, tight);
        comm_gap[s] = std::abs(c.R_c - w.rates.r_ej);

        IsacProblem q = make_isac_problem(dims, 16, 10.0, 10.0, 0.0, seed);
        q.S1 = dft_pilots(4, 16);
        sens_gap[s] = std::abs(optimize_isac_scheme(q, Scheme::gn).R_s - kWaterfill[s]);

        ej[s] = pareto_sweep(p, grid, Scheme::ej);
        gn[s] = pareto_sweep(p, grid, Scheme::gn);
    });
    double wc = 0.0, ws = 0.0;
    for (int s = 0; s < n; ++s)
    {
        wc = std::max(wc, comm_gap[s]);
        ws = std::max(ws, sens_gap[s]);
    }
    int dominated = 0;
    std::ostringstream d;
    d.precision(4);
    for (std::size_t k = 0; k < grid.size(); ++k)
    {
        double ec = 0.0, es = 0.0, gc = 0.0, gs = 0.0;
        for (int s = 0; s < n; ++s)
        {
            ec += ej[s][k].R_c / n;
            es += ej[s][k].R_s / n;
            gc += gn[s][k].R_c / n;
            gs += gn[s][k].R_s / n;
        }
        const bool dom = gc >= ec - 1e-9 && gs >= es - 1e-9 && (gc > ec + 1e-6 || gs > es + 1e-6);
        if (dom)
        {
            ++dominated;
            d << "a1=" << grid[k] << " EJ (" << ec << "," << es << ") dominated by GN (" << gc << "," << gs << "); ";
        }
    }
    const double t = since(t0);
    d << fmt("alpha1=1 gap %.2g (limit 1e-3), alpha1=0 water-filling gap %.2g (limit 1e-3), ", wc, ws)
      << dominated << " of " << grid.size() << " weights dominated";
    report(10, "isac_endpoints_and_frontier", wc <= 1e-3 && ws <= 1e-3 && dominated == 0 && t < 1200.0, d.str(), t);
}

void criterion11()
{
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    const ConicSolverAdapter solver = bundled_solver();
    for (int s = 0; s < 10; ++s)
    {
        const RawChannels raw = build_iid_scenario(Dims{1, 1, 1, 1, 0}, std::uint64_t(300 + s));
        const SolutionRecord r = alternating_miso(raw, Budgets{10.0, 10.0}, Scheme::gn, solver, InitSpec{std::uint64_t(s)});
        worst = std::max(worst, std::abs(r.rates.r_gn - kScalarGnGrid[s]));
    }
    report(11, "miso_sdr_cross_check", worst <= 2e-2, fmt("max |R_GN - grid| %.3g (limit 0.02)", worst), since(t0));
}

void criterion12()
{
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<ScenarioConfig> cfgs(3);
    cfgs[0].kind = Experiment::mimo;
    cfgs[0].dims = Dims{2, 2, 2, 2, 8};
    cfgs[0].schemes = {SchemeId::ej, SchemeId::gn, SchemeId::gn_ran, SchemeId::no_jammer};
    cfgs[1].kind = Experiment::miso;
    cfgs[1].dims = Dims{2, 2, 1, 1, 4};
    cfgs[1].randomizations = 50;
    cfgs[2].kind = Experiment::isac;
    cfgs[2].channel = ChannelModel::iid;
    cfgs[2].dims = Dims{2, 2, 2, 2, 0};
    cfgs[2].sweep_values = {10.0};
    cfgs[2].alpha_step = 0.25;
    bool ok = true;
    for (ScenarioConfig &c : cfgs)
    {
        c.trials = 4;
        c.seed = 12;
        std::ostringstream a, b, m1, m2;
        write_csv(a, run_scenario(c, RunOptions{1, false}).rows);
        write_csv(b, run_scenario(c, RunOptions{workers(), false}).rows);
        ok = ok && strip_timing(a.str()) == strip_timing(b.str());
        ok = ok && metadata_json(c, RunOptions{}) == metadata_json(c, RunOptions{});
    }
    report(12, "determinism", ok, ok ? "mimo, miso and isac tables byte-identical without the timing column"
                                     : "tables differ between reruns",
           since(t0));
}
} // namespace

int main()
{
    from_check(1, check_wmse_identity(200, 1001), 5.0);
    from_check(2, check_form_equivalence(100, 1002));
    criterion3();
    from_check(4, check_monotone_ascent(100, 1004));
    from_check(5, check_mm_descent(10000, 1005));
    from_check(6, check_bisection(500, 1006));
    from_check(7, check_simo_dominance(1000, 1007));
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    std::printf("%d of 12 criteria failed\n", failures);
    return failures;
}
