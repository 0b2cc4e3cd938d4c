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

#include "risjam/miso_sdr.hpp"

#include "risjam/rates.hpp"
#include "risjam/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace risjam
{

namespace
{

struct Quad
{
    double hu = 0.0, gu = 0.0, he = 0.0, ge = 0.0;
};

double mode_rate(Subproblem mode, const Quad &x)
{
    const double eve = std::log1p(x.he + x.ge);
    switch (mode)
    {
    case Subproblem::tilde:
        return std::log1p(x.hu + x.gu) - eve;
    case Subproblem::gn:
        return std::log1p(x.hu + x.gu) - std::log1p(x.gu) + std::log1p(x.ge) - eve;
    case Subproblem::hat:
    case Subproblem::bar:
        break;
    }
    return std::log1p(x.hu) + std::log1p(x.ge) - eve;
}

// x for the beamforming variant (R1, R2) or the phase variant (W, W)
Quad quad_values(const MisoQuadratics &q, const ComplexMatrix &X1, const ComplexMatrix &X2)
{
    Quad x;
    x.hu = trace_product(q.Hu, X1);
    x.he = trace_product(q.He, X1);
    x.gu = trace_product(q.Gu, X2);
    x.ge = trace_product(q.Ge, X2);
    return x;
}

ComplexMatrix outer(const ComplexVector &v)
{
    return v * v.adjoint();
}

// the four affine functionals as per-block coefficient lists
struct Functionals
{
    std::vector<ComplexMatrix> hu, gu, he, ge;
};

std::vector<ComplexMatrix> add(const std::vector<ComplexMatrix> &a, const std::vector<ComplexMatrix> &b)
{
    std::vector<ComplexMatrix> c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
    {
        const bool ha = i < a.size() && a[i].size() > 0, hb = i < b.size() && b[i].size() > 0;
        if (ha && hb)
            c[i] = a[i] + b[i];
        else if (ha)
            c[i] = a[i];
        else if (hb)
            c[i] = b[i];
    }
    return c;
}

std::vector<ComplexMatrix> scale(const std::vector<ComplexMatrix> &a, double s)
{
    std::vector<ComplexMatrix> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].size() > 0)
            c[i] = s * a[i];
    return c;
}

void assemble(SdpProblem &p, const Functionals &f, Subproblem mode, const TangentPoints &t)
{
    auto log_term = [&](std::vector<ComplexMatrix> c) {
        SdpLogTerm l;
        l.coeff = std::move(c);
        p.logs.push_back(std::move(l));
    };
    // log t - t (1 + a) + 1 contributes a constant and a linear part
    auto tangent = [&](double tv, const std::vector<ComplexMatrix> &a) {
        if (!(tv > 0.0))
            throw std::domain_error("miso: tangent point must be positive");
        p.constant += std::log(tv) - tv + 1.0;
        p.linear = add(p.linear, scale(a, -tv));
    };
    switch (mode)
    {
    case Subproblem::tilde:
        log_term(add(f.hu, f.gu));
        break;
    case Subproblem::gn:
        log_term(add(f.hu, f.gu));
        log_term(f.ge);
        tangent(t.tu, f.gu);
        break;
    case Subproblem::hat:
    case Subproblem::bar:
        log_term(f.hu);
        log_term(f.ge);
        break;
    }
    tangent(t.te, add(f.he, f.ge));
    p.linear.resize(p.blocks.size());
}

ComplexVector principal(const ComplexMatrix &X, double &l1, double &l2)
{
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(X));
    const Index n = X.rows();
    l1 = es.eigenvalues()(n - 1);
    l2 = n > 1 ? es.eigenvalues()(n - 2) : 0.0;
    return es.eigenvectors().col(n - 1);
}

ComplexVector phase_map(const ComplexVector &xi)
{
    const Index n = xi.size();
    const double ref = std::arg(xi(n - 1));
    ComplexVector v(n);
    for (Index m = 0; m < n; ++m)
        v(m) = std::polar(1.0, std::arg(xi(m)) - ref);
    v(n - 1) = 1.0;
    return v;
}

ComplexVector beam_map(const ComplexVector &xi, double power)
{
    const double n2 = xi.squaredNorm();
    if (!(n2 > 0.0) || !(power > 0.0))
        return ComplexVector::Zero(xi.size());
    return xi * std::sqrt(power / n2);
}

} // namespace

MisoStacks stack_miso(const RawChannels &raw)
{
    raw.validate();
    const Dims &d = raw.dims;
    if (d.nu != 1 || d.ne != 1)
        throw std::domain_error("stack_miso: UE and Eve must have one antenna");
    MisoStacks s;
    auto build = [&](const ComplexMatrix &ris_row, const ComplexMatrix &into, const ComplexMatrix &direct) {
        ComplexMatrix S(d.m + 1, into.cols());
        for (Index m = 0; m < d.m; ++m)
            S.row(m) = ris_row(0, m) * into.row(m);
        S.row(d.m) = direct.row(0);
        return S;
    };
    s.Hu = build(raw.H_ru, raw.H_br, raw.H_bu);
    s.He = build(raw.H_re, raw.H_br, raw.H_be);
    s.Gu = build(raw.G_ru, raw.G_cr, raw.G_cu);
    s.Ge = build(raw.G_re, raw.G_cr, raw.G_ce);
    return s;
}

ComplexVector phases_to_wbar(const PhaseVector &phi)
{
    ComplexVector w(phi.size() + 1);
    w.head(phi.size()) = phi.conjugate();
    w(phi.size()) = 1.0;
    return w;
}

PhaseVector wbar_to_phases(const ComplexVector &wbar)
{
    const Index m = wbar.size() - 1;
    if (m < 0)
        throw std::domain_error("wbar_to_phases: empty vector");
    const double ref = std::arg(wbar(m));
    PhaseVector phi(m);
    for (Index k = 0; k < m; ++k)
        phi(k) = std::polar(1.0, -(std::arg(wbar(k)) - ref));
    return phi;
}

MisoQuadratics beam_quadratics(const MisoStacks &s, const ComplexVector &wbar)
{
    if (wbar.size() != s.Hu.rows())
        throw std::domain_error("beam_quadratics: wbar length must be M+1");
    MisoQuadratics q;
    q.Hu = outer(s.Hu.adjoint() * wbar);
    q.He = outer(s.He.adjoint() * wbar);
    q.Gu = outer(s.Gu.adjoint() * wbar);
    q.Ge = outer(s.Ge.adjoint() * wbar);
    return q;
}

MisoQuadratics phase_quadratics(const MisoStacks &s, const ComplexVector &f1, const ComplexVector &f2)
{
    if (f1.size() != s.Hu.cols() || f2.size() != s.Gu.cols())
        throw std::domain_error("phase_quadratics: beamformer length mismatch");
    MisoQuadratics q;
    q.Hu = outer(s.Hu * f1);
    q.He = outer(s.He * f1);
    q.Gu = outer(s.Gu * f2);
    q.Ge = outer(s.Ge * f2);
    return q;
}

SdpProblem build_beamforming_sdp(const MisoQuadratics &q, Subproblem mode, const TangentPoints &t, double P1,
                                 double P2)
{
    if (q.Hu.rows() != q.He.rows() || q.Gu.rows() != q.Ge.rows())
        throw std::domain_error("build_beamforming_sdp: shape mismatch");
    if (!(P1 >= 0.0) || !(P2 >= 0.0))
        throw std::domain_error("build_beamforming_sdp: negative budget");
    SdpProblem p;
    p.blocks = {SdpBlock{q.Hu.rows(), BlockConstraint::trace_cap, P1},
                SdpBlock{q.Gu.rows(), BlockConstraint::trace_cap, mode == Subproblem::bar ? 0.0 : P2}};
    const ComplexMatrix none;
    Functionals f{{q.Hu, none}, {none, q.Gu}, {q.He, none}, {none, q.Ge}};
    assemble(p, f, mode, t);
    p.validate();
    return p;
}

SdpProblem build_phase_sdp(const MisoQuadratics &q, Subproblem mode, const TangentPoints &t)
{
    const Index n = q.Hu.rows();
    if (q.Gu.rows() != n || q.He.rows() != n || q.Ge.rows() != n)
        throw std::domain_error("build_phase_sdp: shape mismatch");
    SdpProblem p;
    p.blocks = {SdpBlock{n, BlockConstraint::unit_diagonal, 0.0}};
    Functionals f{{q.Hu}, {q.Gu}, {q.He}, {q.Ge}};
    assemble(p, f, mode, t);
    p.validate();
    return p;
}

double update_t(const MisoQuadratics &q, const ComplexMatrix &R1, const ComplexMatrix &R2, TangentTerm which)
{
    switch (which)
    {
    case TangentTerm::e:
        return 1.0 / (1.0 + trace_product(q.He, R1) + trace_product(q.Ge, R2));
    case TangentTerm::u:
        return 1.0 / (1.0 + trace_product(q.Gu, R2));
    case TangentTerm::We:
        return 1.0 / (1.0 + trace_product(q.He + q.Ge, R1));
    case TangentTerm::Wu:
        break;
    }
    return 1.0 / (1.0 + trace_product(q.Gu, R1));
}

double lifted_rate_beam(const MisoQuadratics &q, Subproblem mode, const ComplexMatrix &R1, const ComplexMatrix &R2)
{
    return mode_rate(mode, quad_values(q, R1, R2));
}

double lifted_rate_phase(const MisoQuadratics &q, Subproblem mode, const ComplexMatrix &W)
{
    return mode_rate(mode, quad_values(q, W, W));
}

bool is_rank_one(const ComplexMatrix &X, double ratio)
{
    if (X.rows() <= 1)
        return true;
    double l1 = 0.0, l2 = 0.0;
    principal(X, l1, l2);
    if (!(l1 > 0.0))
        return true;
    return std::max(l2, 0.0) / l1 <= ratio;
}

RecoveryResult gaussian_randomization(const std::vector<ComplexMatrix> &X, int count, RecoveryKind kind,
                                      std::uint64_t seed,
                                      const std::function<double(const std::vector<ComplexVector> &)> &score)
{
    if (count <= 0)
        throw std::domain_error("gaussian_randomization: count must be positive");
    const std::size_t nb = X.size();
    std::vector<ComplexMatrix> L(nb);
    std::vector<double> power(nb);
    RecoveryResult res;
    res.rank_one = true;
    std::vector<ComplexVector> cand(nb);
    for (std::size_t b = 0; b < nb; ++b)
    {
        require_hermitian(X[b], "gaussian_randomization: input");
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(X[b]));
        const RealVector lam = es.eigenvalues().cwiseMax(0.0);
        L[b] = es.eigenvectors() * lam.cwiseSqrt().cast<cd>().asDiagonal();
        power[b] = std::max(0.0, X[b].trace().real());
        res.rank_one = res.rank_one && is_rank_one(X[b]);
        const ComplexVector u = es.eigenvectors().col(X[b].rows() - 1);
        cand[b] = kind == RecoveryKind::phase ? phase_map(u) : beam_map(u, power[b]);
    }
    res.vectors = cand;
    res.score = score(cand);
    res.candidates = 1;
    if (res.rank_one)
        return res;

    Rng rng(seed);
    for (int k = 0; k < count; ++k)
    {
        for (std::size_t b = 0; b < nb; ++b)
        {
            const ComplexVector xi = L[b] * complex_gaussian(X[b].rows(), 1, rng);
            cand[b] = kind == RecoveryKind::phase ? phase_map(xi) : beam_map(xi, power[b]);
        }
        const double s = score(cand);
        ++res.candidates;
        if (s > res.score)
        {
            res.score = s;
            res.vectors = cand;
        }
    }
    return res;
}

namespace
{

double vector_rate(const MisoStacks &s, Subproblem mode, const ComplexVector &wbar, const ComplexVector &f1,
                   const ComplexVector &f2)
{
    Quad x;
    x.hu = std::norm(wbar.dot(s.Hu * f1));
    x.he = std::norm(wbar.dot(s.He * f1));
    x.gu = std::norm(wbar.dot(s.Gu * f2));
    x.ge = std::norm(wbar.dot(s.Ge * f2));
    return mode_rate(mode, x);
}

void check_solution(const SdpProblem &p, const SdpSolution &sol)
{
    if (!p.feasible(sol.X, 1e-6))
        throw std::runtime_error("alternating_miso: conic solver returned an infeasible point");
}

} // namespace

SolutionRecord alternating_miso_subproblem(const RawChannels &raw, const Budgets &budgets, Subproblem mode,
                                           const ConicSolverAdapter &solver, const InitSpec &init,
                                           const MisoStop &stop, MisoTrace *trace)
{
    const MisoStacks s = stack_miso(raw);
    const Dims &d = raw.dims;
    if (!(budgets.P1 >= 0.0) || !(budgets.P2 >= 0.0))
        throw std::domain_error("alternating_miso: negative budget");
    const bool bar = mode == Subproblem::bar;
    const double P2 = bar ? 0.0 : budgets.P2;

    Rng rng(init.seed);
    ComplexVector f1 = ComplexVector::Constant(d.nb, std::sqrt(budgets.P1 / double(d.nb)));
    ComplexVector f2 = ComplexVector::Constant(d.nc, std::sqrt(P2 / double(d.nc)));
    if (init.F1)
        f1 = init.F1->col(0);
    if (init.F2 && !bar)
        f2 = init.F2->col(0);
    PhaseVector phi = init.phi ? *init.phi : random_phases(d.m, rng);
    validate_phases(phi, d.m);
    ComplexVector wbar = phases_to_wbar(phi);

    MisoTrace local;
    MisoTrace &tr = trace ? *trace : local;
    SolutionRecord rec;
    rec.mode = mode;
    double rate = vector_rate(s, mode, wbar, f1, f2);
    rec.trace.push_back(rate);

    auto inner = [&](SdpProblem (*build)(const MisoQuadratics &, Subproblem, const TangentPoints &, double, double),
                     const MisoQuadratics &q, std::vector<ComplexMatrix> X, bool phase) {
        double prev = phase ? lifted_rate_phase(q, mode, X[0]) : lifted_rate_beam(q, mode, X[0], X[1]);
        tr.lifted.push_back({prev});
        for (int k = 0; k < stop.inner_max; ++k)
        {
            TangentPoints t;
            if (phase)
            {
                t.te = update_t(q, X[0], X[0], TangentTerm::We);
                t.tu = update_t(q, X[0], X[0], TangentTerm::Wu);
            }
            else
            {
                t.te = update_t(q, X[0], X[1], TangentTerm::e);
                t.tu = update_t(q, X[0], X[1], TangentTerm::u);
            }
            SdpProblem p = build(q, mode, t, budgets.P1, P2);
            p.start = X;
            SdpSolution sol = solver(p);
            ++tr.sdp_calls;
            check_solution(p, sol);
            X = sol.X;
            const double cur = phase ? lifted_rate_phase(q, mode, X[0]) : lifted_rate_beam(q, mode, X[0], X[1]);
            tr.lifted.back().push_back(cur);
            const bool done = std::abs(cur - prev) <= stop.inner_tol;
            prev = cur;
            if (done)
                break;
        }
        return X;
    };
    auto beam_build = [](const MisoQuadratics &q, Subproblem m, const TangentPoints &t, double a, double b) {
        return build_beamforming_sdp(q, m, t, a, b);
    };
    auto phase_build = [](const MisoQuadratics &q, Subproblem m, const TangentPoints &t, double, double) {
        return build_phase_sdp(q, m, t);
    };

    int it = 0;
    for (; it < stop.max_outer; ++it)
    {
        const MisoQuadratics qb = beam_quadratics(s, wbar);
        std::vector<ComplexMatrix> R = inner(beam_build, qb, {outer(f1), outer(f2)}, false);
        RecoveryResult rb = gaussian_randomization(
            R, stop.randomizations, RecoveryKind::beam, derive_seed(init.seed, std::uint64_t(2 * it + 1)),
            [&](const std::vector<ComplexVector> &v) { return vector_rate(s, mode, wbar, v[0], v[1]); });
        if (rb.score >= vector_rate(s, mode, wbar, f1, f2))
        {
            f1 = rb.vectors[0];
            f2 = rb.vectors[1];
        }

        if (d.m > 0 && stop.optimize_phases)
        {
            const MisoQuadratics qp = phase_quadratics(s, f1, f2);
            std::vector<ComplexMatrix> W = inner(phase_build, qp, {outer(wbar)}, true);
            RecoveryResult rp = gaussian_randomization(
                W, stop.randomizations, RecoveryKind::phase, derive_seed(init.seed, std::uint64_t(2 * it + 2)),
                [&](const std::vector<ComplexVector> &v) { return vector_rate(s, mode, v[0], f1, f2); });
            if (rp.score >= vector_rate(s, mode, wbar, f1, f2))
                wbar = rp.vectors[0];
        }

        const double next = vector_rate(s, mode, wbar, f1, f2);
        rec.trace.push_back(next);
        tr.rate.push_back(next);
        const bool done = std::abs(next - rate) <= stop.delta;
        rate = next;
        if (done)
        {
            rec.converged = true;
            ++it;
            break;
        }
    }

    rec.F1 = f1;
    rec.F2 = bar ? ComplexMatrix::Zero(d.nc, 1) : ComplexMatrix(f2);
    rec.phi = wbar_to_phases(wbar);
    rec.iterations = it;
    const ChannelSet ch = compose_effective(raw, rec.phi);
    const RawRates rr = raw_rates(ch, rec.F1, rec.F2);
    rec.objective = subproblem_rate(rr, mode);
    rec.rates = bundle_from_raw(rr);
    return rec;
}

SolutionRecord alternating_miso(const RawChannels &raw, const Budgets &budgets, Scheme scheme,
                                const ConicSolverAdapter &solver, const InitSpec &init, const MisoStop &stop)
{
    if (scheme == Scheme::gn)
        return alternating_miso_subproblem(raw, budgets, Subproblem::gn, solver, init, stop);
    SolutionRecord best;
    bool have = false;
    for (Subproblem mode : {Subproblem::bar, Subproblem::hat, Subproblem::tilde})
    {
        SolutionRecord r = alternating_miso_subproblem(raw, budgets, mode, solver, init, stop);
        if (!have || r.rates.r_ej > best.rates.r_ej + 1e-9)
        {
            best = std::move(r);
            have = true;
        }
    }
    return best;
}

} // namespace risjam
