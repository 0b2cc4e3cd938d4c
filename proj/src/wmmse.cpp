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

#include "risjam/wmmse.hpp"
#include "risjam/power_solve.hpp"

#include <cmath>
#include <stdexcept>

namespace risjam
{

std::string to_string(Subproblem s)
{
    switch (s)
    {
    case Subproblem::tilde:
        return "tilde";
    case Subproblem::hat:
        return "hat";
    case Subproblem::gn:
        return "gn";
    case Subproblem::bar:
        return "bar";
    }
    return "?";
}

Subproblem subproblem_from_string(const std::string &s)
{
    if (s == "tilde")
        return Subproblem::tilde;
    if (s == "hat")
        return Subproblem::hat;
    if (s == "gn")
        return Subproblem::gn;
    if (s == "bar")
        return Subproblem::bar;
    throw std::invalid_argument("unknown subproblem: " + s);
}

std::string to_string(Scheme s)
{
    return s == Scheme::ej ? "ej" : "gn";
}

Scheme scheme_from_string(const std::string &s)
{
    if (s == "ej")
        return Scheme::ej;
    if (s == "gn")
        return Scheme::gn;
    throw std::invalid_argument("unknown scheme: " + s);
}

double subproblem_rate(const RawRates &r, Subproblem mode)
{
    switch (mode)
    {
    case Subproblem::tilde:
        return r.tilde;
    case Subproblem::hat:
        return r.hat;
    case Subproblem::gn:
        return r.gn;
    case Subproblem::bar:
        return r.bar;
    }
    return 0.0;
}

namespace
{

// Effective links; H1 and G1 carry F1, H2 and G2 carry F2
enum Link
{
    kH1 = 0,
    kH2,
    kG1,
    kG2
};

int precoder_of(Link l)
{
    return (l == kH1 || l == kG1) ? 0 : 1;
}

const ComplexMatrix &effective(const ChannelSet &ch, Link l)
{
    switch (l)
    {
    case kH1:
        return ch.H1;
    case kH2:
        return ch.H2;
    case kG1:
        return ch.G1;
    default:
        return ch.G2;
    }
}

const ComplexMatrix &precoder(const PrecoderPair &p, int k)
{
    return k == 0 ? p.F1 : p.F2;
}

// D + L diag(phi) R
struct Affine
{
    const ComplexMatrix *D;
    const ComplexMatrix *L;
    const ComplexMatrix *R;
};

Affine affine(const RawChannels &raw, Link l)
{
    switch (l)
    {
    case kH1:
        return {&raw.H_bu, &raw.H_ru, &raw.H_br};
    case kH2:
        return {&raw.G_cu, &raw.G_ru, &raw.G_cr};
    case kG1:
        return {&raw.H_be, &raw.H_re, &raw.H_br};
    default:
        return {&raw.G_ce, &raw.G_re, &raw.G_cr};
    }
}

// Tr(W E) term with E = (I - U^H H F)(.)^H + U^H (I + sum_intf H_j Q_j H_j^H) U
struct MseTerm
{
    const ComplexMatrix *U;
    const ComplexMatrix *W;
    Link sig;
    std::vector<Link> intf;
};

struct TermSet
{
    std::vector<MseTerm> mse;
    const ComplexMatrix *W3;
    std::vector<Link> eve{kG1, kG2};
};

TermSet terms_for(const AuxState &aux)
{
    TermSet t;
    t.W3 = &aux.W3;
    switch (aux.mode)
    {
    case Subproblem::tilde:
        t.mse.push_back({&aux.U1, &aux.W1, kH1, {kH2}});
        t.mse.push_back({&aux.U2, &aux.W2, kH2, {}});
        break;
    case Subproblem::gn:
        t.mse.push_back({&aux.U1, &aux.W1, kH1, {kH2}});
        t.mse.push_back({&aux.U_G2, &aux.W_G2, kG2, {}});
        break;
    case Subproblem::hat:
    case Subproblem::bar:
        t.mse.push_back({&aux.U_H1, &aux.W_H1, kH1, {}});
        t.mse.push_back({&aux.U_G2, &aux.W_G2, kG2, {}});
        break;
    }
    return t;
}

ComplexMatrix gram(const ComplexMatrix &H, const ComplexMatrix &F)
{
    ComplexMatrix HF = H * F;
    return HF * HF.adjoint();
}

// Optimal (U, W) for a link with noise-plus-interference covariance N
void mse_aux(const ComplexMatrix &H, const ComplexMatrix &F, const ComplexMatrix &N, ComplexMatrix &U,
             ComplexMatrix &W)
{
    const ComplexMatrix HF = H * F;
    U = solve_hpd(N + HF * HF.adjoint(), HF);
    W = hermitian_part(eye(F.cols()) + HF.adjoint() * solve_hpd(N, HF));
}

ComplexMatrix eve_covariance(const ChannelSet &ch, const PrecoderPair &p)
{
    return eye(ch.G1.rows()) + gram(ch.G1, p.F1) + gram(ch.G2, p.F2);
}

void check_pair(const ChannelSet &ch, const PrecoderPair &p)
{
    if (p.F1.rows() != ch.H1.cols() || p.F2.rows() != ch.H2.cols())
        throw std::domain_error("wmmse: precoder shape does not match the channel set");
}

ComplexMatrix term_noise(const ChannelSet &ch, const PrecoderPair &p, const MseTerm &t)
{
    const ComplexMatrix &Hs = effective(ch, t.sig);
    ComplexMatrix N = eye(Hs.rows());
    for (Link l : t.intf)
        N += gram(effective(ch, l), precoder(p, precoder_of(l)));
    return N;
}

} // namespace

AuxState update_aux_tilde(const ChannelSet &ch, const PrecoderPair &p)
{
    check_pair(ch, p);
    AuxState a;
    a.mode = Subproblem::tilde;
    const ComplexMatrix Iu = eye(ch.H1.rows());
    mse_aux(ch.H1, p.F1, Iu + gram(ch.H2, p.F2), a.U1, a.W1);
    mse_aux(ch.H2, p.F2, Iu, a.U2, a.W2);
    a.W3 = inverse_hpd(eve_covariance(ch, p));
    return a;
}

AuxState update_aux_hat(const ChannelSet &ch, const PrecoderPair &p)
{
    check_pair(ch, p);
    AuxState a;
    a.mode = Subproblem::hat;
    mse_aux(ch.H1, p.F1, eye(ch.H1.rows()), a.U_H1, a.W_H1);
    mse_aux(ch.G2, p.F2, eye(ch.G2.rows()), a.U_G2, a.W_G2);
    a.W3 = inverse_hpd(eve_covariance(ch, p));
    return a;
}

AuxState update_aux_gn(const ChannelSet &ch, const PrecoderPair &p)
{
    check_pair(ch, p);
    AuxState a;
    a.mode = Subproblem::gn;
    const ComplexMatrix Iu = eye(ch.H1.rows());
    mse_aux(ch.H1, p.F1, Iu + gram(ch.H2, p.F2), a.U1, a.W1);
    mse_aux(ch.G2, p.F2, eye(ch.G2.rows()), a.U_G2, a.W_G2);
    a.W3 = inverse_hpd(eve_covariance(ch, p));
    return a;
}

AuxState update_aux(const ChannelSet &ch, const PrecoderPair &p, Subproblem mode)
{
    switch (mode)
    {
    case Subproblem::tilde:
        return update_aux_tilde(ch, p);
    case Subproblem::gn:
        return update_aux_gn(ch, p);
    case Subproblem::hat:
        return update_aux_hat(ch, p);
    case Subproblem::bar: {
        AuxState a = update_aux_hat(ch, p);
        a.mode = Subproblem::bar;
        return a;
    }
    }
    throw std::logic_error("update_aux: unknown mode");
}

double weighted_mse(const ChannelSet &ch, const PrecoderPair &p, const AuxState &aux)
{
    check_pair(ch, p);
    const TermSet ts = terms_for(aux);
    double s = 0.0;
    for (const MseTerm &t : ts.mse)
    {
        const ComplexMatrix &Hs = effective(ch, t.sig);
        const ComplexMatrix &Fs = precoder(p, precoder_of(t.sig));
        const ComplexMatrix E = wmse_error(Hs, Fs, eye(Fs.cols()), term_noise(ch, p, t), *t.U);
        s += trace_product(*t.W, E);
    }
    s += trace_product(*ts.W3, eve_covariance(ch, p));
    return s;
}

double aux_lower_bound(const ChannelSet &ch, const PrecoderPair &p, const AuxState &aux)
{
    const TermSet ts = terms_for(aux);
    double s = 0.0;
    for (const MseTerm &t : ts.mse)
        s += logdet_hpd(*t.W) + double(t.W->rows());
    s += logdet_hpd(*ts.W3) + double(ts.W3->rows());
    return s - weighted_mse(ch, p, aux);
}

NormalEquations normal_equations(const ChannelSet &ch, const AuxState &aux, int which)
{
    const TermSet ts = terms_for(aux);
    const Index n = which == 0 ? ch.H1.cols() : ch.H2.cols();
    NormalEquations ne;
    ne.A = ComplexMatrix::Zero(n, n);
    ne.C = ComplexMatrix::Zero(n, n);
    for (const MseTerm &t : ts.mse)
    {
        const ComplexMatrix X = (*t.U) * (*t.W) * t.U->adjoint();
        std::vector<Link> links = t.intf;
        links.push_back(t.sig);
        for (Link l : links)
        {
            if (precoder_of(l) != which)
                continue;
            const ComplexMatrix &H = effective(ch, l);
            ne.A += H.adjoint() * X * H;
        }
        if (precoder_of(t.sig) == which)
        {
            const ComplexMatrix &H = effective(ch, t.sig);
            ComplexMatrix C = H.adjoint() * (*t.U) * (*t.W);
            if (C.cols() != n)
                throw std::domain_error("normal_equations: stream count must equal antenna count");
            ne.C += C;
        }
    }
    for (Link l : ts.eve)
    {
        if (precoder_of(l) != which)
            continue;
        const ComplexMatrix &G = effective(ch, l);
        ne.A += G.adjoint() * (*ts.W3) * G;
    }
    ne.A = hermitian_part(ne.A);
    return ne;
}

PrecoderSolve solve_precoders(const ChannelSet &ch, const AuxState &aux, double P1, double P2,
                              Subproblem mode)
{
    PrecoderSolve out;
    out.p.P1 = P1;
    out.p.P2 = mode == Subproblem::bar ? 0.0 : P2;
    {
        NormalEquations ne = normal_equations(ch, aux, 0);
        PowerSolveResult r = solve_power_constrained(ne.A, ne.C, P1);
        out.p.F1 = r.F;
        out.lambda1 = r.lambda;
    }
    if (mode == Subproblem::bar || P2 == 0.0)
    {
        out.p.F2 = ComplexMatrix::Zero(ch.H2.cols(), ch.H2.cols());
    }
    else
    {
        NormalEquations ne = normal_equations(ch, aux, 1);
        PowerSolveResult r = solve_power_constrained(ne.A, ne.C, P2);
        out.p.F2 = r.F;
        out.lambda2 = r.lambda;
    }
    return out;
}

double MmProblem::f(const PhaseVector &phi) const
{
    if (phi.size() == 0)
        return 0.0;
    return phi.dot(Xi * phi).real() + 2.0 * phi.dot(d.conjugate()).real();
}

MmProblem build_mm_problem(const RawChannels &raw, const PrecoderPair &p, const AuxState &aux)
{
    raw.validate();
    const Index M = raw.dims.m;
    if (p.F1.rows() != raw.dims.nb || p.F2.rows() != raw.dims.nc)
        throw std::domain_error("build_mm_problem: precoder shape mismatch");
    MmProblem mm;
    mm.Xi = ComplexMatrix::Zero(M, M);
    ComplexMatrix D = ComplexMatrix::Zero(M, M);
    double ct = 0.0;

    // Tr(X H F F^H H^H) with H = Dl + Ll diag(phi) Rl
    auto quadratic = [&](Link l, const ComplexMatrix &X) {
        const Affine a = affine(raw, l);
        const ComplexMatrix &F = precoder(p, precoder_of(l));
        const ComplexMatrix DF = (*a.D) * F;
        ct += trace_product(X, DF * DF.adjoint());
        if (M == 0)
            return;
        const ComplexMatrix J = (*a.R) * F;
        const ComplexMatrix B = a.L->adjoint() * X * (*a.L);
        const ComplexMatrix C = J * J.adjoint();
        mm.Xi += B.cwiseProduct(C.transpose());
        D += J * DF.adjoint() * X * (*a.L);
    };

    const TermSet ts = terms_for(aux);
    for (const MseTerm &t : ts.mse)
    {
        const ComplexMatrix &U = *t.U;
        const ComplexMatrix &W = *t.W;
        const ComplexMatrix X = U * W * U.adjoint();
        quadratic(t.sig, X);
        for (Link l : t.intf)
            quadratic(l, X);
        // -2 Re Tr(W U^H H F)
        const Affine a = affine(raw, t.sig);
        const ComplexMatrix &F = precoder(p, precoder_of(t.sig));
        const ComplexMatrix WUh = W * U.adjoint();
        ct += -2.0 * trace_product(WUh, (*a.D) * F);
        if (M > 0)
            D -= (*a.R) * F * WUh * (*a.L);
        ct += W.trace().real() + trace_product(WUh, U);
    }
    for (Link l : ts.eve)
        quadratic(l, *ts.W3);
    ct += ts.W3->trace().real();

    mm.Xi = hermitian_part(mm.Xi);
    mm.d = D.diagonal();
    mm.C_t = ct;
    if (M == 0)
        return mm;
    if (M <= 512)
    {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(mm.Xi, Eigen::EigenvaluesOnly);
        const double lmin = es.eigenvalues()(0);
        mm.lambda_max = es.eigenvalues()(M - 1);
        if (lmin < -1e-6 * std::max(1.0, std::abs(mm.lambda_max)))
            throw std::logic_error("build_mm_problem: quadratic form is not positive semidefinite");
    }
    else
    {
        mm.lambda_max = power_iteration_lambda_max(mm.Xi, 1e-8, 1000);
    }
    return mm;
}

PhaseVector mm_phase_step(const MmProblem &prob, const PhaseVector &phi)
{
    const Index M = phi.size();
    if (prob.Xi.rows() != M || prob.d.size() != M)
        throw std::domain_error("mm_phase_step: size mismatch");
    // slight inflation keeps lambda I - Xi positive semidefinite under eigenvalue roundoff
    const double lam = prob.lambda_max + 1e-12 * std::abs(prob.lambda_max);
    const ComplexVector q = lam * phi - prob.Xi * phi - prob.d.conjugate();
    PhaseVector out = phi;
    for (Index m = 0; m < M; ++m)
    {
        const double a = std::abs(q(m));
        if (a >= 1e-14)
            out(m) = q(m) / a;
    }
    return out;
}

PrecoderPair initial_precoders(const Dims &dims, const Budgets &b)
{
    PrecoderPair p;
    p.P1 = b.P1;
    p.P2 = b.P2;
    p.F1 = scaled_identity(dims.nb, dims.nb, std::sqrt(b.P1 / double(dims.nb)));
    p.F2 = scaled_identity(dims.nc, dims.nc, std::sqrt(b.P2 / double(dims.nc)));
    return p;
}

namespace
{

SolutionRecord run_single(const RawChannels &raw, const Budgets &budgets, Subproblem mode, PrecoderPair p,
                          PhaseVector phi, const StopRule &stop)
{
    const bool bar = mode == Subproblem::bar;
    const double P2 = bar ? 0.0 : budgets.P2;
    p.P1 = budgets.P1;
    p.P2 = P2;
    if (bar)
        p.F2.setZero();

    ChannelSet ch = compose_effective(raw, phi);
    double obj = subproblem_rate(raw_rates(ch, p.F1, p.F2), mode);

    SolutionRecord rec;
    rec.mode = mode;
    rec.trace.push_back(obj);

    PrecoderPair best_p = p;
    PhaseVector best_phi = phi;
    double best = obj;

    for (int it = 1; it <= stop.max_outer; ++it)
    {
        const AuxState aux = update_aux(ch, p, mode);
        p = solve_precoders(ch, aux, budgets.P1, P2, mode).p;
        if (stop.optimize_phases && raw.dims.m > 0)
        {
            const MmProblem mm = build_mm_problem(raw, p, aux);
            double fcur = mm.f(phi);
            for (int s = 0; s < stop.mm_max; ++s)
            {
                PhaseVector next = mm_phase_step(mm, phi);
                const double fn = mm.f(next);
                ++rec.mm_steps;
                const double gain = fcur - fn;
                if (gain >= 0.0)
                    phi = next;
                if (!(gain > stop.mm_tol * (1.0 + std::abs(fcur))))
                    break;
                fcur = fn;
            }
            ch = compose_effective(raw, phi);
        }
        const double next = subproblem_rate(raw_rates(ch, p.F1, p.F2), mode);
        rec.trace.push_back(next);
        rec.iterations = it;
        if (next >= best)
        {
            best = next;
            best_p = p;
            best_phi = phi;
        }
        if (std::abs(next - obj) <= stop.delta)
        {
            rec.converged = true;
            break;
        }
        obj = next;
    }

    if (stop.max_outer <= 0)
        rec.converged = true;
    rec.F1 = best_p.F1;
    rec.F2 = best_p.F2;
    rec.phi = best_phi;
    const ChannelSet fin = compose_effective(raw, best_phi);
    const RawRates rr = raw_rates(fin, rec.F1, rec.F2);
    rec.objective = subproblem_rate(rr, mode);
    rec.rates = bundle_from_raw(rr);
    return rec;
}

} // namespace

SolutionRecord optimize_subproblem(const RawChannels &raw, const Budgets &budgets, Subproblem mode,
                                   const InitSpec &init, const StopRule &stop)
{
    raw.validate();
    if (!(budgets.P1 >= 0.0) || !(budgets.P2 >= 0.0))
        throw std::domain_error("optimize_subproblem: negative budget");
    const Dims &d = raw.dims;
    const int restarts = std::max(1, stop.restarts);
    SolutionRecord best;
    bool have = false;
    for (int k = 0; k < restarts; ++k)
    {
        PrecoderPair p = initial_precoders(d, budgets);
        PhaseVector phi;
        Rng rng(derive_seed(init.seed, std::uint64_t(k)));
        if (k == 0)
        {
            if (init.F1)
                p.F1 = *init.F1;
            if (init.F2)
                p.F2 = *init.F2;
            phi = init.phi ? *init.phi : random_phases(d.m, rng);
        }
        else
        {
            ComplexMatrix A = complex_gaussian(d.nb, d.nb, rng);
            ComplexMatrix B = complex_gaussian(d.nc, d.nc, rng);
            p.F1 = A * std::sqrt(budgets.P1 / A.squaredNorm());
            p.F2 = B * std::sqrt(budgets.P2 / B.squaredNorm());
            phi = random_phases(d.m, rng);
        }
        validate_phases(phi, d.m);
        SolutionRecord r = run_single(raw, budgets, mode, p, phi, stop);
        if (!have || r.objective > best.objective)
        {
            best = std::move(r);
            have = true;
        }
    }
    return best;
}

SolutionRecord optimize_ej(const RawChannels &raw, const Budgets &budgets, const InitSpec &init,
                           const StopRule &stop)
{
    SolutionRecord best;
    bool have = false;
    for (Subproblem mode : {Subproblem::bar, Subproblem::tilde, Subproblem::hat})
    {
        SolutionRecord r = optimize_subproblem(raw, budgets, mode, init, stop);
        if (!have || r.rates.r_ej > best.rates.r_ej + 1e-9)
        {
            best = std::move(r);
            have = true;
        }
    }
    return best;
}

} // namespace risjam
