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
#include "risjam/miso_sdr.hpp"
#include "risjam/rates.hpp"

#include <cmath>

using namespace risjam;

namespace
{
ComplexMatrix rank_one(const ComplexVector &v)
{
    return v * v.adjoint();
}

// inner (SDP, t) alternation at fixed phases, replicated from the public pieces
std::vector<ComplexMatrix> alternate_phase(const MisoQuadratics &q, Subproblem mode, ComplexMatrix W,
                                           std::vector<double> *trace = nullptr)
{
    ConicSolverAdapter solve = bundled_solver();
    for (int k = 0; k < 20; ++k)
    {
        TangentPoints t{update_t(q, W, W, TangentTerm::We), update_t(q, W, W, TangentTerm::Wu)};
        SdpProblem p = build_phase_sdp(q, mode, t);
        p.start = {W};
        W = solve(p).X[0];
        if (trace)
            trace->push_back(lifted_rate_phase(q, mode, W));
    }
    return {W};
}
} // namespace

TEST_CASE("trace-cap projection")
{
    ComplexMatrix A = ComplexMatrix::Zero(2, 2);
    A(0, 0) = 3.0;
    A(1, 1) = 1.0;
    ComplexMatrix P = project_trace_cap(A, 2.0);
    CHECK(std::abs(P(0, 0) - cd(2.0, 0.0)) < 1e-12);
    CHECK(std::abs(P(1, 1)) < 1e-12);

    ComplexMatrix B = 0.1 * eye(3);
    CHECK((project_trace_cap(B, 2.0) - B).norm() < 1e-14);
    B(2, 2) = -1.0;
    ComplexMatrix Pb = project_trace_cap(B, 2.0);
    CHECK(min_eigenvalue(Pb) > -1e-14);
    CHECK(std::abs(Pb(2, 2)) < 1e-14);
    CHECK(project_trace_cap(A, 0.0).norm() == 0.0);

    // equal eigenvalues share the excess
    ComplexMatrix C = 2.0 * eye(4);
    CHECK((project_trace_cap(C, 4.0) - eye(4)).norm() < 1e-12);
}

TEST_CASE("bundled solver on problems with closed-form optima")
{
    Rng rng(31);
    for (int s = 0; s < 10; ++s)
    {
        // max log(1 + Tr(A X)) s.t. Tr X <= P: all power on the top eigenvector
        ComplexMatrix Y = complex_gaussian(4, 4, rng);
        ComplexMatrix A = Y * Y.adjoint();
        const double P = 0.5 + 2.0 * rng.uniform();
        SdpProblem p;
        p.blocks = {SdpBlock{4, BlockConstraint::trace_cap, P}};
        p.logs = {SdpLogTerm{1.0, 1.0, {A}}};
        SdpSolution sol = solve_sdp_bundled(p);
        CHECK(sol.objective == doctest::Approx(std::log(1.0 + P * max_eigenvalue(A))).epsilon(1e-8));
        CHECK(p.feasible(sol.X));

        // max Tr(c c^H W) over unit-diagonal W: sum |c_m| squared
        ComplexVector c = complex_gaussian(5, 1, rng);
        SdpProblem q;
        q.blocks = {SdpBlock{5, BlockConstraint::unit_diagonal, 0.0}};
        q.linear = {rank_one(c)};
        SdpSolution sq = solve_sdp_bundled(q);
        const double l1 = c.cwiseAbs().sum();
        CHECK(sq.objective == doctest::Approx(l1 * l1).epsilon(1e-8));
        CHECK(q.feasible(sq.X));
    }

    SdpProblem bad;
    bad.blocks = {SdpBlock{2, BlockConstraint::trace_cap, 1.0}};
    bad.logs = {SdpLogTerm{-1.0, 1.0, {eye(2)}}};
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad.logs = {SdpLogTerm{1.0, 1.0, {eye(3)}}};
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
}

TEST_CASE("beamforming SDP construction")
{
    RawChannels raw = build_iid_scenario(Dims{3, 2, 1, 1, 4}, 50);
    MisoStacks st = stack_miso(raw);
    Rng rng(51);
    PhaseVector phi = random_phases(4, rng);
    ComplexVector wbar = phases_to_wbar(phi);
    MisoQuadratics q = beam_quadratics(st, wbar);
    CHECK(is_rank_one(q.Hu));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(q.Hu);
    CHECK(std::abs(es.eigenvalues()(0)) < 1e-9 * es.eigenvalues()(2));
    CHECK((wbar_to_phases(wbar) - phi).norm() < 1e-12);

    // quadratic forms against the explicit effective channel
    ComplexVector f1 = complex_gaussian(3, 1, rng), f2 = complex_gaussian(2, 1, rng);
    ChannelSet ch = compose_effective(raw, phi);
    CHECK(trace_product(q.Hu, rank_one(f1)) == doctest::Approx(std::norm((ch.H1 * f1)(0))).epsilon(1e-10));
    CHECK(trace_product(q.Ge, rank_one(f2)) == doctest::Approx(std::norm((ch.G2 * f2)(0))).epsilon(1e-10));

    // hat with fixed te at R1 = R2 = 0: log te - te + 1
    for (double te : {1.0, 0.3, 2.0})
    {
        SdpProblem p = build_beamforming_sdp(q, Subproblem::hat, TangentPoints{te, 1.0}, 1.0, 1.0);
        const double v = p.objective({ComplexMatrix::Zero(3, 3), ComplexMatrix::Zero(2, 2)});
        CHECK(v == doctest::Approx(std::log(te) - te + 1.0).epsilon(1e-14));
        CHECK(v <= 0.0);
        if (te == 1.0)
            CHECK(v == 0.0);
    }
    SdpProblem pb = build_beamforming_sdp(q, Subproblem::bar, TangentPoints{}, 1.0, 1.0);
    CHECK(pb.blocks[1].cap == 0.0);
    CHECK_THROWS_AS(stack_miso(build_iid_scenario(Dims{2, 2, 2, 1, 1}, 1)), std::domain_error);
}

TEST_CASE("scalar beamforming SDP against grid search")
{
    Rng rng(52);
    for (int s = 0; s < 5; ++s)
    {
        RawChannels raw = build_iid_scenario(Dims{1, 1, 1, 1, 0}, std::uint64_t(60 + s));
        MisoStacks st = stack_miso(raw);
        MisoQuadratics q = beam_quadratics(st, phases_to_wbar(PhaseVector(0)));
        const double te = 0.2 + 0.8 * rng.uniform();
        SdpProblem p = build_beamforming_sdp(q, Subproblem::hat, TangentPoints{te, 1.0}, 3.0, 2.0);
        SdpSolution sol = solve_sdp_bundled(p);
        const double grid = oracle::tangent_hat_grid(std::norm(raw.H_bu(0, 0)), std::norm(raw.H_be(0, 0)),
                                                     std::norm(raw.G_ce(0, 0)), te, 3.0, 2.0, 200);
        CHECK(sol.objective >= grid - 1e-9);
        CHECK(sol.objective - grid <= 1e-3);
    }
}

TEST_CASE("tangent updates")
{
    RawChannels raw = build_iid_scenario(Dims{2, 2, 1, 1, 3}, 53);
    MisoStacks st = stack_miso(raw);
    Rng rng(54);
    MisoQuadratics q = beam_quadratics(st, phases_to_wbar(random_phases(3, rng)));
    CHECK(update_t(q, ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 2), TangentTerm::e) == 1.0);
    CHECK(update_t(q, ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 2), TangentTerm::u) == 1.0);
    ComplexMatrix R1 = rank_one(complex_gaussian(2, 1, rng)), R2 = rank_one(complex_gaussian(2, 1, rng));
    const double t1 = update_t(q, R1, R2, TangentTerm::e);
    const double t2 = update_t(q, R1, 2.0 * R2, TangentTerm::e);
    CHECK(t1 > 0.0);
    CHECK(t2 <= t1);

    // alternating (SDP, t) iterations never decrease the lifted objective
    for (Subproblem mode : {Subproblem::hat, Subproblem::tilde, Subproblem::gn})
    {
        MisoTrace tr;
        MisoStop stop;
        stop.max_outer = 4;
        stop.randomizations = 50;
        alternating_miso_subproblem(raw, Budgets{2.0, 2.0}, mode, bundled_solver(), InitSpec{7}, stop, &tr);
        CHECK(!tr.lifted.empty());
        for (const auto &loop : tr.lifted)
            for (std::size_t k = 1; k < loop.size(); ++k)
                CHECK(loop[k] >= loop[k - 1] - 1e-6);
    }
}

TEST_CASE("phase SDP")
{
    RawChannels raw = build_iid_scenario(Dims{2, 2, 1, 1, 3}, 55);
    MisoStacks st = stack_miso(raw);
    MisoQuadratics q0 = phase_quadratics(st, ComplexVector::Zero(2), ComplexVector::Zero(2));
    SdpProblem p0 = build_phase_sdp(q0, Subproblem::hat, TangentPoints{});
    Rng rng(56);
    const ComplexVector w = phases_to_wbar(random_phases(3, rng));
    CHECK(p0.objective({rank_one(w)}) == 0.0);
    CHECK(p0.objective({eye(4)}) == 0.0);

    // unit-modulus lift is feasible and rank one
    CHECK(p0.feasible({rank_one(w)}));
    CHECK(is_rank_one(rank_one(w)));
    CHECK(!p0.feasible({2.0 * rank_one(w)}));

    // M = 1 against a 4096-point phase grid
    for (int s = 0; s < 5; ++s)
    {
        RawChannels r1 = build_iid_scenario(Dims{2, 2, 1, 1, 1}, std::uint64_t(70 + s));
        MisoStacks s1 = stack_miso(r1);
        ComplexVector f1 = complex_gaussian(2, 1, rng), f2 = complex_gaussian(2, 1, rng);
        for (Subproblem mode : {Subproblem::tilde, Subproblem::hat})
        {
            MisoQuadratics q = phase_quadratics(s1, f1, f2);
            std::vector<ComplexMatrix> W = alternate_phase(q, mode, eye(2));
            RecoveryResult rr = gaussian_randomization(W, 1000, RecoveryKind::phase, 9, [&](const auto &v) {
                return oracle::miso_rate(r1, wbar_to_phases(v[0]), f1, f2, mode);
            });
            const double grid = oracle::phase_grid_m1(r1, f1, f2, mode, 4096);
            CHECK(rr.score >= grid - 1e-5);
            CHECK(lifted_rate_phase(q, mode, W[0]) >= grid - 1e-5);
        }
    }
}

TEST_CASE("gaussian randomization")
{
    Rng rng(57);
    PhaseVector phi = random_phases(5, rng);
    ComplexVector w = phases_to_wbar(phi);
    auto zero = [](const std::vector<ComplexVector> &) { return 0.0; };
    RecoveryResult r = gaussian_randomization({rank_one(w)}, 1000, RecoveryKind::phase, 1, zero);
    CHECK(r.rank_one);
    CHECK(r.candidates == 1);
    CHECK((wbar_to_phases(r.vectors[0]) - phi).norm() < 1e-9);
    CHECK_THROWS_AS(gaussian_randomization({rank_one(w)}, 0, RecoveryKind::phase, 1, zero), std::domain_error);

    // beam recovery keeps the trace
    ComplexMatrix Y = complex_gaussian(3, 3, rng);
    ComplexMatrix R = Y * Y.adjoint();
    RecoveryResult rb = gaussian_randomization({R}, 20, RecoveryKind::beam, 2, zero);
    CHECK(!rb.rank_one);
    CHECK(rb.vectors[0].squaredNorm() == doctest::Approx(R.trace().real()).epsilon(1e-12));

    // a superset of candidates cannot do worse
    ComplexVector c = complex_gaussian(6, 1, rng);
    ComplexMatrix W = 0.5 * eye(6) + 0.5 * rank_one(phases_to_wbar(random_phases(5, rng)));
    auto score = [&](const std::vector<ComplexVector> &v) { return std::norm(c.dot(v[0])); };
    for (std::uint64_t seed = 0; seed < 5; ++seed)
    {
        RecoveryResult a = gaussian_randomization({W}, 10, RecoveryKind::phase, seed, score);
        RecoveryResult b = gaussian_randomization({W}, 1000, RecoveryKind::phase, seed, score);
        CHECK(b.score >= a.score);
        CHECK(b.candidates == 1001);
        for (Index m = 0; m < 6; ++m)
            CHECK(std::abs(std::abs(b.vectors[0](m)) - 1.0) < 1e-12);
    }
}

TEST_CASE("randomized phases against the relaxation bound")
{
    double ratio = 0.0;
    int n = 0;
    Rng rng(58);
    for (int s = 0; s < 50; ++s)
    {
        RawChannels raw = build_iid_scenario(Dims{2, 2, 1, 1, 4}, std::uint64_t(400 + s));
        raw.H_ru *= 3.0;
        raw.H_bu *= 3.0;
        MisoStacks st = stack_miso(raw);
        ComplexVector f1 = complex_gaussian(2, 1, rng), f2 = 0.3 * complex_gaussian(2, 1, rng);
        MisoQuadratics q = phase_quadratics(st, f1, f2);
        std::vector<ComplexMatrix> W = alternate_phase(q, Subproblem::tilde, eye(5));
        const double bound = lifted_rate_phase(q, Subproblem::tilde, W[0]);
        if (bound <= 0.1)
            continue;
        RecoveryResult rr = gaussian_randomization(W, 1000, RecoveryKind::phase, std::uint64_t(s), [&](const auto &v) {
            return oracle::miso_rate(raw, wbar_to_phases(v[0]), f1, f2, Subproblem::tilde);
        });
        CHECK(rr.score <= bound + 1e-6);
        ratio += rr.score / bound;
        ++n;
    }
    CHECK(n >= 25);
    ratio /= double(n);
    MESSAGE("mean randomized / relaxed ratio: " << ratio << " over " << n << " instances");
    CHECK(ratio >= 0.95);
}

TEST_CASE("alternating MISO")
{
    RawChannels raw = build_iid_scenario(Dims{2, 2, 1, 1, 3}, 59);
    SolutionRecord z = alternating_miso(raw, Budgets{0.0, 0.0}, Scheme::ej, bundled_solver(), InitSpec{1});
    CHECK(z.rates.r_ej == 0.0);
    CHECK(z.rates.r_gn == 0.0);

    for (Scheme sc : {Scheme::ej, Scheme::gn})
    {
        MisoStop stop;
        stop.randomizations = 200;
        SolutionRecord r = alternating_miso(raw, Budgets{3.0, 3.0}, sc, bundled_solver(), InitSpec{2}, stop);
        PrecoderPair p{r.F1, r.F2, 3.0, 3.0};
        p.check_feasible();
        RateBundle b = rate_ej(compose_effective(raw, r.phi), p);
        CHECK(std::abs(b.r_ej - r.rates.r_ej) <= 1e-9);
        CHECK(std::abs(b.r_gn - r.rates.r_gn) <= 1e-9);
        for (Index m = 0; m < 3; ++m)
            CHECK(std::abs(std::abs(r.phi(m)) - 1.0) < 1e-12);
        for (std::size_t k = 1; k < r.trace.size(); ++k)
            CHECK(r.trace[k] >= r.trace[k - 1] - 1e-7);
    }
}

TEST_CASE("MISO on scalar channels against grid search")
{
    for (int s = 0; s < 10; ++s)
    {
        RawChannels raw = build_iid_scenario(Dims{1, 1, 1, 1, 0}, std::uint64_t(300 + s));
        SolutionRecord r = alternating_miso(raw, Budgets{10.0, 10.0}, Scheme::gn, bundled_solver(), InitSpec{std::uint64_t(s)});
        oracle::GridMax g = oracle::scalar_gn_grid(raw.H_bu(0, 0), raw.G_cu(0, 0), raw.H_be(0, 0), raw.G_ce(0, 0),
                                                   10.0, 10.0, 200);
        CHECK(std::abs(r.rates.r_gn - g.value) <= 2e-2);
    }
}
