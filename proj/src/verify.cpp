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

#include "risjam/verify.hpp"
#include "risjam/asymptotics.hpp"
#include "risjam/harness.hpp"
#include "risjam/isac.hpp"
#include "risjam/power_solve.hpp"
#include "risjam/rates.hpp"
#include "risjam/wmmse.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace risjam
{

namespace
{
template <class Fn> CheckResult timed(const std::string &name, Fn &&fn)
{
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r = fn();
    r.name = name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

CheckResult verdict(double worst, double limit, const std::string &what)
{
    CheckResult r;
    r.passed = worst <= limit;
    std::ostringstream os;
    os.precision(3);
    os << what << " worst " << worst << " (limit " << limit << ")";
    r.detail = os.str();
    return r;
}

Index draw(Rng &rng, Index lo, Index hi)
{
    return lo + std::min(hi - lo, Index(rng.uniform() * double(hi - lo + 1)));
}

ComplexMatrix random_pd(Index n, Rng &rng)
{
    ComplexMatrix A = complex_gaussian(n, n, rng);
    return A * A.adjoint() + 0.1 * eye(n);
}
} // namespace

CheckResult check_wmse_identity(int instances, std::uint64_t seed)
{
    return timed("wmse_identity", [&] {
        Rng rng(seed);
        double worst = 0.0;
        for (int s = 0; s < instances; ++s)
        {
            const Index p = draw(rng, 1, 6), q = draw(rng, 1, 6), d = draw(rng, 1, 6);
            const ComplexMatrix H = complex_gaussian(p, q, rng);
            const ComplexMatrix F = complex_gaussian(q, d, rng);
            const ComplexMatrix R = random_pd(d, rng), N = random_pd(p, rng);
            const ComplexMatrix U = wmse_optimal_u(H, F, R, N);
            const ComplexMatrix W = inverse_hpd(wmse_optimal_e(H, F, R, N));
            worst = std::max(worst, std::abs(wmse_gap(H, F, R, N, W, U)));
        }
        return verdict(worst, 1e-8, "|gap|");
    });
}

CheckResult check_form_equivalence(int instances, std::uint64_t seed)
{
    return timed("form_equivalence", [&] {
        Rng rng(seed);
        double worst = 0.0;
        for (int s = 0; s < instances; ++s)
        {
            const Dims d{draw(rng, 1, 4), draw(rng, 1, 4), draw(rng, 1, 4), draw(rng, 1, 4), draw(rng, 0, 4)};
            const RawChannels raw = build_iid_scenario(d, derive_seed(seed, std::uint64_t(s)));
            const ChannelSet ch = compose_effective(raw, random_phases(d.m, rng));
            const ComplexMatrix F1 = complex_gaussian(d.nb, d.nb, rng), F2 = complex_gaussian(d.nc, d.nc, rng);
            const RawRates r = raw_rates(ch, F1, F2);
            worst = std::max({worst, std::abs(r.gn - r.gn_alt), std::abs(r.tilde - r.tilde_alt)});
        }
        return verdict(worst, 1e-9, "form difference");
    });
}

CheckResult check_monotone_ascent(int runs, std::uint64_t seed)
{
    return timed("monotone_ascent", [&] {
        Rng rng(seed);
        double worst = 0.0;
        const Subproblem modes[] = {Subproblem::tilde, Subproblem::hat, Subproblem::gn, Subproblem::bar};
        for (int s = 0; s < runs; ++s)
        {
            const Dims d{draw(rng, 1, 4), draw(rng, 1, 4), draw(rng, 1, 4), draw(rng, 1, 4), draw(rng, 0, 16)};
            const RawChannels raw = build_iid_scenario(d, derive_seed(seed, std::uint64_t(s)));
            const double P = std::pow(10.0, 2.0 * rng.uniform());
            InitSpec init;
            init.seed = derive_seed(seed, 1000 + s);
            const SolutionRecord r = optimize_subproblem(raw, Budgets{P, P}, modes[s % 4], init);
            for (std::size_t k = 1; k < r.trace.size(); ++k)
                worst = std::max(worst, r.trace[k - 1] - r.trace[k]);
        }
        return verdict(worst, 1e-7, "trace decrease");
    });
}

CheckResult check_mm_descent(long steps, std::uint64_t seed)
{
    return timed("mm_descent", [&] {
        Rng rng(seed);
        double worst_inc = 0.0, worst_mod = 0.0;
        long done = 0;
        for (int s = 0; done < steps; ++s)
        {
            const Dims d{draw(rng, 1, 4), draw(rng, 1, 4), draw(rng, 1, 4), draw(rng, 1, 4), draw(rng, 1, 16)};
            const RawChannels raw = build_iid_scenario(d, derive_seed(seed, std::uint64_t(s)));
            PrecoderPair p;
            p.F1 = complex_gaussian(d.nb, d.nb, rng);
            p.F2 = complex_gaussian(d.nc, d.nc, rng);
            p.P1 = p.F1.squaredNorm();
            p.P2 = p.F2.squaredNorm();
            PhaseVector phi = random_phases(d.m, rng);
            const Subproblem mode = Subproblem(s % 4);
            const AuxState aux = update_aux(compose_effective(raw, phi), p, mode);
            const MmProblem mm = build_mm_problem(raw, p, aux);
            double prev = mm.f(phi);
            for (int k = 0; k < 50 && done < steps; ++k, ++done)
            {
                phi = mm_phase_step(mm, phi);
                const double f = mm.f(phi);
                worst_inc = std::max(worst_inc, f - prev);
                for (Index m = 0; m < phi.size(); ++m)
                    worst_mod = std::max(worst_mod, std::abs(std::abs(phi(m)) - 1.0));
                prev = f;
            }
        }
        CheckResult r = verdict(worst_inc, 1e-9, "increase");
        r.passed = r.passed && worst_mod <= 1e-12;
        std::ostringstream os;
        os.precision(3);
        os << r.detail << ", modulus error " << worst_mod << " (limit 1e-12)";
        r.detail = os.str();
        return r;
    });
}

CheckResult check_bisection(int solves, std::uint64_t seed)
{
    return timed("bisection_slackness", [&] {
        Rng rng(seed);
        double worst = 0.0, worst_feas = 0.0;
        for (int s = 0; s < solves; ++s)
        {
            const Index n = draw(rng, 1, 6);
            const ComplexMatrix X = complex_gaussian(n, draw(rng, 1, 6), rng);
            const ComplexMatrix A = X * X.adjoint();
            const ComplexMatrix C = complex_gaussian(n, draw(rng, 1, 4), rng);
            const double P = std::pow(10.0, 4.0 * rng.uniform() - 2.0);
            const PowerSolveResult r = solve_power_constrained(A, C, P);
            worst = std::max(worst, std::abs(r.lambda * (r.trace - P)) / P);
            worst_feas = std::max(worst_feas, (r.trace - P) / P);
        }
        CheckResult r = verdict(worst, 1e-6, "|lambda (Tr - P)| / P");
        r.passed = r.passed && worst_feas <= 1e-9;
        r.detail += ", feasibility excess " + std::to_string(worst_feas);
        return r;
    });
}

CheckResult check_simo_dominance(int instances, std::uint64_t seed)
{
    return timed("simo_dominance", [&] {
        Rng rng(seed);
        double worst = 0.0;
        for (int s = 0; s < instances; ++s)
        {
            const Dims d{1, 1, draw(rng, 1, 4), draw(rng, 1, 4), 0};
            const ChannelSet ch =
                compose_effective(build_iid_scenario(d, derive_seed(seed, std::uint64_t(s))), PhaseVector(0));
            const ComplexMatrix F1 = ComplexMatrix::Constant(1, 1, std::sqrt(10.0 * rng.uniform()));
            const ComplexMatrix F2 = ComplexMatrix::Constant(1, 1, std::sqrt(10.0 * rng.uniform()));
            const RawRates r = raw_rates(ch, F1, F2);
            worst = std::max(worst, r.gn - r.hat);
        }
        return verdict(worst, 1e-10, "R_GN - R_hat");
    });
}

CheckResult check_sylvester(int instances, std::uint64_t seed)
{
    return timed("sylvester_residual", [&] {
        double worst = 0.0;
        for (int s = 0; s < instances; ++s)
        {
            const double a1 = double(s % 11) / 10.0;
            const IsacProblem p = make_isac_problem(Dims{3, 2, 2, 2, 0}, 8, 10.0, 10.0, a1,
                                                    derive_seed(seed, std::uint64_t(s)));
            worst = std::max(worst, optimize_isac(p, Subproblem(s % 4)).max_residual);
        }
        return verdict(worst, 1e-8, "relative residual");
    });
}

CheckResult check_phase_alignment(int trials, std::uint64_t seed)
{
    return timed("phase_alignment", [&] {
        Rng rng(seed);
        double worst = 0.0;
        for (int t = 0; t < trials; ++t)
        {
            const Index m = draw(rng, 1, 64);
            const ComplexVector h = complex_gaussian(m, 1, rng), g = complex_gaussian(m, 1, rng);
            const PhaseVector phi = align_phases(h, g);
            cd sum = 0.0;
            double mag = 0.0;
            for (Index i = 0; i < m; ++i)
            {
                sum += h(i) * g(i) * phi(i);
                mag += std::abs(h(i) * g(i));
            }
            worst = std::max({worst, std::abs(sum.imag()) / mag, std::abs(sum.real() - mag) / mag});
        }
        return verdict(worst, 1e-12, "relative misalignment");
    });
}

CheckResult check_build_determinism(std::uint64_t seed)
{
    return timed("determinism", [&] {
        ScenarioConfig cfg;
        cfg.kind = Experiment::mimo;
        cfg.dims = Dims{2, 2, 2, 2, 4};
        cfg.trials = 3;
        cfg.seed = seed;
        cfg.max_outer = 20;
        cfg.schemes = {SchemeId::ej, SchemeId::gn, SchemeId::gn_ran, SchemeId::no_jammer};
        std::ostringstream a, b;
        write_csv(a, run_scenario(cfg, RunOptions{1, false}).rows);
        write_csv(b, run_scenario(cfg, RunOptions{3, false}).rows);
        CheckResult r;
        r.passed = strip_timing(a.str()) == strip_timing(b.str());
        r.detail = r.passed ? "tables identical across worker counts" : "tables differ";
        return r;
    });
}

std::vector<CheckResult> run_invariant_suite(double scale, std::uint64_t seed)
{
    auto n = [&](double full) { return std::max(1, int(std::lround(full * scale))); };
    return {check_wmse_identity(n(200), seed),
            check_form_equivalence(n(100), seed + 1),
            check_monotone_ascent(n(100), seed + 2),
            check_mm_descent(long(n(10000)), seed + 3),
            check_bisection(n(500), seed + 4),
            check_simo_dominance(n(1000), seed + 5),
            check_sylvester(n(40), seed + 6),
            check_phase_alignment(n(1000), seed + 7),
            check_build_determinism(seed + 8)};
}

} // namespace risjam
