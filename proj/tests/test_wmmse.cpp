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

#include "doctest.h"
#include "oracles.hpp"
#include "risjam/power_solve.hpp"
#include "risjam/wmmse.hpp"

#include <cmath>

using namespace risjam;

namespace
{
PrecoderPair random_pair(const Dims &d, Rng &rng, double scale = 1.0)
{
    PrecoderPair p;
    p.F1 = scale * complex_gaussian(d.nb, d.nb, rng);
    p.F2 = scale * complex_gaussian(d.nc, d.nc, rng);
    p.P1 = p.F1.squaredNorm();
    p.P2 = p.F2.squaredNorm();
    return p;
}

ComplexMatrix gram(const ComplexMatrix &H, const ComplexMatrix &F)
{
    return H * F * F.adjoint() * H.adjoint();
}

std::vector<double> term_gaps(const ChannelSet &ch, const PrecoderPair &p, const AuxState &a)
{
    // per-term wmse_gap for the UE terms and the direct bound for the Eve term
    std::vector<double> g;
    const ComplexMatrix Iu = eye(ch.H1.rows());
    if (a.mode == Subproblem::tilde)
    {
        g.push_back(wmse_gap(ch.H1, p.F1, eye(p.F1.cols()), Iu + gram(ch.H2, p.F2), a.W1, a.U1));
        g.push_back(wmse_gap(ch.H2, p.F2, eye(p.F2.cols()), Iu, a.W2, a.U2));
    }
    else
    {
        g.push_back(wmse_gap(ch.H1, p.F1, eye(p.F1.cols()), Iu, a.W_H1, a.U_H1));
        g.push_back(wmse_gap(ch.G2, p.F2, eye(p.F2.cols()), eye(ch.G2.rows()), a.W_G2, a.U_G2));
    }
    return g;
}
} // namespace

TEST_CASE("tilde auxiliaries")
{
    Dims d{2, 2, 2, 2, 0};
    ChannelSet ch = compose_effective(build_iid_scenario(d, 1), PhaseVector(0));
    Rng rng(2);
    PrecoderPair p = random_pair(d, rng);

    PrecoderPair z1 = p;
    z1.F1.setZero();
    AuxState a1 = update_aux_tilde(ch, z1);
    CHECK(a1.U1.norm() == 0.0);
    CHECK((a1.W1 - eye(2)).norm() < 1e-15);

    PrecoderPair z2 = p;
    z2.F2.setZero();
    AuxState a2 = update_aux_tilde(ch, z2);
    CHECK(a2.U2.norm() == 0.0);
    CHECK((a2.W2 - eye(2)).norm() < 1e-15);
    CHECK((a2.W3 - inverse_hpd(eye(2) + gram(ch.G1, p.F1))).norm() < 1e-12);

    AuxState a = update_aux_tilde(ch, p);
    for (double g : term_gaps(ch, p, a))
        CHECK(std::abs(g) < 1e-8);
    RawRates r = raw_rates(ch, p.F1, p.F2);
    CHECK(aux_lower_bound(ch, p, a) == doctest::Approx(r.tilde).epsilon(1e-8));
    CHECK(min_eigenvalue(a.W1) > 0.0);
    CHECK(min_eigenvalue(a.W2) > 0.0);
    CHECK(min_eigenvalue(a.W3) > 0.0);

    // optimality of every weight
    const double lb = aux_lower_bound(ch, p, a);
    for (int k = 0; k < 3; ++k)
    {
        AuxState b = a;
        ComplexMatrix &W = k == 0 ? b.W1 : (k == 1 ? b.W2 : b.W3);
        W += 0.1 * eye(W.rows());
        CHECK(aux_lower_bound(ch, p, b) < lb);
    }
}

TEST_CASE("hat and gn auxiliaries")
{
    Dims d{3, 2, 2, 3, 0};
    ChannelSet ch = compose_effective(build_iid_scenario(d, 4), PhaseVector(0));
    Rng rng(5);
    PrecoderPair p = random_pair(d, rng);

    PrecoderPair z = p;
    z.F1.setZero();
    z.F2.setZero();
    AuxState a0 = update_aux_hat(ch, z);
    CHECK((a0.W_H1 - eye(3)).norm() < 1e-15);
    CHECK((a0.W_G2 - eye(2)).norm() < 1e-15);

    AuxState a = update_aux_hat(ch, p);
    for (double g : term_gaps(ch, p, a))
        CHECK(std::abs(g) < 1e-8);
    RawRates r = raw_rates(ch, p.F1, p.F2);
    CHECK(aux_lower_bound(ch, p, a) == doctest::Approx(r.hat).epsilon(1e-8));

    AuxState g = update_aux_gn(ch, p);
    CHECK(aux_lower_bound(ch, p, g) == doctest::Approx(r.gn).epsilon(1e-8));
    const double lb = aux_lower_bound(ch, p, g);
    for (int k = 0; k < 3; ++k)
    {
        AuxState b = g;
        ComplexMatrix &W = k == 0 ? b.W1 : (k == 1 ? b.W_G2 : b.W3);
        W += 0.1 * eye(W.rows());
        CHECK(aux_lower_bound(ch, p, b) < lb);
    }
}

TEST_CASE("precoder solve")
{
    // zero target
    PowerSolveResult z = solve_power_constrained(eye(3), ComplexMatrix::Zero(3, 3), 1.0);
    CHECK(z.F.norm() == 0.0);
    CHECK(z.lambda == 0.0);

    // singular normal matrix, zero right-hand side
    ComplexMatrix S = ComplexMatrix::Zero(2, 2);
    S(0, 0) = 1.0;
    PowerSolveResult zs = solve_power_constrained(S, ComplexMatrix::Zero(2, 2), 1.0);
    CHECK(zs.F.norm() == 0.0);

    Rng rng(6);
    ComplexMatrix A0 = complex_gaussian(2, 2, rng);
    ComplexMatrix A = A0 * A0.adjoint() + eye(2);
    ComplexMatrix C = complex_gaussian(2, 2, rng);

    // inactive constraint
    ComplexMatrix F0 = regularized_solve(A, C, 0.0);
    PowerSolveResult loose = solve_power_constrained(A, C, 10.0 * F0.squaredNorm());
    CHECK(loose.lambda == 0.0);
    CHECK((loose.F - F0).norm() < 1e-12 * F0.norm());

    // tight budget vs grid search over lambda
    const double P = 0.05 * F0.squaredNorm();
    PowerSolveResult tight = solve_power_constrained(A, C, P);
    CHECK(tight.lambda > 0.0);
    const double grid = oracle::lambda_grid_trace(A, C, P, 10000);
    CHECK(std::abs(tight.trace - grid) <= 1e-3 * grid);
    CHECK(std::abs(tight.lambda * (tight.trace - P)) <= 1e-6 * P);
    CHECK(tight.trace <= P * (1 + 1e-9));
    CHECK((tight.F - regularized_solve(A, C, tight.lambda)).norm() < 1e-9 * tight.F.norm());

    // singular A with C in its range: minimum-norm solution at lambda = 0
    ComplexMatrix v = complex_gaussian(3, 1, rng);
    ComplexMatrix As = v * v.adjoint();
    ComplexMatrix Cs = As * complex_gaussian(3, 3, rng);
    PowerSolveResult ps = solve_power_constrained(As, Cs, 1e6);
    CHECK(ps.lambda == 0.0);
    CHECK((As * ps.F - Cs).norm() < 1e-9 * Cs.norm());
    CHECK((ps.F - As.completeOrthogonalDecomposition().pseudoInverse() * Cs).norm() < 1e-8 * ps.F.norm());
}

TEST_CASE("bisection slackness on random solves")
{
    Rng rng(7);
    for (int s = 0; s < 100; ++s)
    {
        const Index n = 1 + Index(rng.uniform() * 5);
        ComplexMatrix X = complex_gaussian(n, Index(1 + rng.uniform() * 3), rng);
        ComplexMatrix A = X * X.adjoint();
        ComplexMatrix C = A * complex_gaussian(n, n, rng) + (rng.uniform() < 0.5 ? 0.0 : 1.0) * complex_gaussian(n, n, rng);
        const double P = std::pow(10.0, 3.0 * rng.uniform() - 1.5);
        PowerSolveResult r = solve_power_constrained(A, C, P);
        CHECK(r.trace <= P * (1 + 1e-9));
        CHECK(std::abs(r.lambda * (r.trace - P)) <= 1e-6 * P);
    }
}

TEST_CASE("MM quadratic model")
{
    Dims d{2, 2, 2, 2, 1};
    RawChannels raw = build_iid_scenario(d, 10);
    Rng rng(11);
    PrecoderPair p = random_pair(d, rng);

    PrecoderPair z = p;
    z.F1.setZero();
    z.F2.setZero();
    ChannelSet ch0 = compose_effective(raw, random_phases(1, rng));
    MmProblem m0 = build_mm_problem(raw, z, update_aux_tilde(ch0, z));
    CHECK(m0.Xi.norm() == 0.0);
    CHECK(m0.d.norm() == 0.0);

    for (Subproblem mode : {Subproblem::tilde, Subproblem::hat, Subproblem::gn})
    {
        ChannelSet ch = compose_effective(raw, random_phases(1, rng));
        AuxState aux = update_aux(ch, p, mode);
        MmProblem mm = build_mm_problem(raw, p, aux);
        for (int k = 0; k < 20; ++k)
        {
            PhaseVector phi = random_phases(1, rng);
            ChannelSet c2 = compose_effective(raw, phi);
            const double direct = weighted_mse(c2, p, aux);
            CHECK(mm.objective(phi) == doctest::Approx(direct).epsilon(1e-8));
        }
    }

    // larger M
    Dims d2{3, 2, 2, 3, 6};
    RawChannels raw2 = build_iid_scenario(d2, 12);
    PrecoderPair p2 = random_pair(d2, rng);
    for (Subproblem mode : {Subproblem::tilde, Subproblem::hat, Subproblem::gn, Subproblem::bar})
    {
        PrecoderPair q = p2;
        if (mode == Subproblem::bar)
            q.F2.setZero();
        ChannelSet ch = compose_effective(raw2, random_phases(6, rng));
        AuxState aux = update_aux(ch, q, mode);
        MmProblem mm = build_mm_problem(raw2, q, aux);
        CHECK(min_eigenvalue(mm.Xi) >= -1e-9 * std::max(1.0, mm.lambda_max));
        PhaseVector phi = random_phases(6, rng);
        CHECK(mm.objective(phi) == doctest::Approx(weighted_mse(compose_effective(raw2, phi), q, aux)).epsilon(1e-8));
    }
}

TEST_CASE("Hadamard product of PSD matrices")
{
    Rng rng(13);
    for (int s = 0; s < 50; ++s)
    {
        ComplexMatrix X = complex_gaussian(5, 3, rng), Y = complex_gaussian(5, 2, rng);
        ComplexMatrix B = X * X.adjoint(), C = Y * Y.adjoint();
        CHECK(min_eigenvalue(B.cwiseProduct(C.transpose())) >= -1e-9);
    }
}

TEST_CASE("MM phase step")
{
    const Index M = 5;
    MmProblem lin;
    lin.Xi = ComplexMatrix::Zero(M, M);
    lin.d = ComplexVector::Ones(M);
    lin.lambda_max = 0.0;
    Rng rng(14);
    PhaseVector phi = random_phases(M, rng);
    PhaseVector next = mm_phase_step(lin, phi);
    for (Index m = 0; m < M; ++m)
        CHECK(std::abs(next(m) - cd(-1.0, 0.0)) < 1e-15);
    CHECK(lin.f(next) == doctest::Approx(-2.0 * M));

    MmProblem flat;
    flat.Xi = 3.0 * eye(M);
    flat.d = ComplexVector::Zero(M);
    flat.lambda_max = 6.0;
    PhaseVector same = mm_phase_step(flat, phi);
    CHECK((same - phi).norm() < 1e-12);

    // M = 2 against random search on the torus
    for (int s = 0; s < 3; ++s)
    {
        ComplexMatrix X = complex_gaussian(2, 2, rng);
        MmProblem mm;
        mm.Xi = X * X.adjoint();
        mm.d = complex_gaussian(2, 1, rng);
        mm.lambda_max = max_eigenvalue(mm.Xi);
        PhaseVector ph = random_phases(2, rng);
        double prev = mm.f(ph);
        for (int k = 0; k < 5000; ++k)
        {
            ph = mm_phase_step(mm, ph);
            const double f = mm.f(ph);
            CHECK(f <= prev + 1e-9);
            prev = f;
        }
        const double best = oracle::torus_random_min(mm.Xi, mm.d, 1000000, std::uint64_t(90 + s));
        CHECK(prev <= best + 1e-4);
    }
}

TEST_CASE("zero budgets")
{
    RawChannels raw = build_iid_scenario(Dims{2, 2, 2, 2, 4}, 20);
    SolutionRecord r = optimize_subproblem(raw, Budgets{0.0, 0.0}, Subproblem::gn, InitSpec{3});
    CHECK(r.rates.r_gn == 0.0);
    CHECK(r.rates.r_ej == 0.0);
    CHECK(r.iterations == 1);
    CHECK(r.converged);
}

TEST_CASE("scalar GN optimizer against grid search")
{
    for (int s = 0; s < 20; ++s)
    {
        RawChannels raw = build_iid_scenario(Dims{1, 1, 1, 1, 0}, std::uint64_t(300 + s));
        const double P = 10.0;
        SolutionRecord r = optimize_subproblem(raw, Budgets{P, P}, Subproblem::gn, InitSpec{std::uint64_t(s)});
        oracle::GridMax g = oracle::scalar_gn_grid(raw.H_bu(0, 0), raw.G_cu(0, 0), raw.H_be(0, 0),
                                                   raw.G_ce(0, 0), P, P, 200);
        CHECK(std::abs(r.rates.r_gn - g.value) <= 1e-2);
    }
}

TEST_CASE("monotone ascent, feasibility and self-consistency")
{
    Rng rng(15);
    for (int s = 0; s < 20; ++s)
    {
        Dims d{1 + Index(rng.uniform() * 4), 1 + Index(rng.uniform() * 4), 1 + Index(rng.uniform() * 4),
               1 + Index(rng.uniform() * 4), Index(rng.uniform() * 17)};
        RawChannels raw = build_iid_scenario(d, std::uint64_t(700 + s));
        const Subproblem mode = Subproblem(s % 4);
        const Budgets b{5.0, 5.0};
        SolutionRecord r = optimize_subproblem(raw, b, mode, InitSpec{std::uint64_t(s)});
        for (std::size_t k = 1; k < r.trace.size(); ++k)
            CHECK(r.trace[k] >= r.trace[k - 1] - 1e-7);
        CHECK(r.F1.squaredNorm() <= b.P1 * (1 + 1e-9));
        CHECK(r.F2.squaredNorm() <= b.P2 * (1 + 1e-9));
        for (Index m = 0; m < d.m; ++m)
            CHECK(std::abs(std::abs(r.phi(m)) - 1.0) < 1e-12);
        ChannelSet ch = compose_effective(raw, r.phi);
        RawRates rr = raw_rates(ch, r.F1, r.F2);
        CHECK(std::abs(subproblem_rate(rr, mode) - r.objective) <= 1e-9);
        RateBundle bb = rate_ej(ch, PrecoderPair{r.F1, r.F2, b.P1, b.P2});
        CHECK(std::abs(bb.r_ej - r.rates.r_ej) <= 1e-9);
        if (mode == Subproblem::bar)
            CHECK(r.F2.norm() == 0.0);
    }
}

TEST_CASE("EJ optimizer")
{
    for (int s = 0; s < 10; ++s)
    {
        RawChannels raw = build_iid_scenario(Dims{1, 1, 1, 1, 4}, std::uint64_t(800 + s));
        const Budgets b{4.0, 4.0};
        StopRule stop;
        stop.restarts = 4;
        SolutionRecord r = optimize_ej(raw, b, InitSpec{std::uint64_t(s)}, stop);
        CHECK(r.rates.r_ej >= 0.0);
        SolutionRecord bar = optimize_subproblem(raw, b, Subproblem::bar, InitSpec{std::uint64_t(s)});
        CHECK(r.rates.r_ej >= bar.rates.r_ej - 1e-12);
        const double rs = oracle::random_search_ej_siso(raw, b.P1, b.P2, 10000, std::uint64_t(40 + s));
        CHECK(r.rates.r_ej >= rs);
        CHECK((r.mode == Subproblem::bar || r.mode == Subproblem::hat || r.mode == Subproblem::tilde));
    }
}
