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

#include "risjam/isac.hpp"

#include "risjam/rates.hpp"
#include "risjam/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace risjam
{

void IsacProblem::validate() const
{
    const Index nb = ch.H1.cols();
    if (ch.G1.cols() != nb || S1.rows() != nb || R_hs.rows() != nb || R_hs.cols() != nb)
        throw std::domain_error("IsacProblem: shape mismatch");
    if (S1.cols() < 1)
        throw std::domain_error("IsacProblem: pilot length must be positive");
    if (!(alpha1 >= 0.0) || !(alpha2 >= 0.0) || std::abs(alpha1 + alpha2 - 1.0) > 1e-12)
        throw std::domain_error("IsacProblem: weights must be nonnegative and sum to one");
    if (!(P1 >= 0.0) || !(P2 >= 0.0))
        throw std::domain_error("IsacProblem: negative budget");
    require_hermitian(R_hs, "IsacProblem: R_hs");
    if (min_eigenvalue(R_hs) < -1e-12 * std::max(1.0, R_hs.norm()))
        throw std::domain_error("IsacProblem: R_hs must be positive semidefinite");
}

ComplexMatrix random_pilots(Index nb, Index T, std::uint64_t seed)
{
    Rng rng(seed);
    return complex_gaussian(nb, T, rng);
}

ComplexMatrix dft_pilots(Index nb, Index T)
{
    ComplexMatrix S(nb, T);
    for (Index i = 0; i < nb; ++i)
        for (Index t = 0; t < T; ++t)
            S(i, t) = std::polar(1.0, -2.0 * kPi * double(i) * double(t) / double(T));
    return S;
}

ComplexMatrix sample_wishart(Index n, Index dof, std::uint64_t seed)
{
    if (n < 1 || dof < 1)
        throw std::domain_error("sample_wishart: sizes must be positive");
    Rng rng(seed);
    const ComplexMatrix Z = complex_gaussian(n, dof, rng);
    return hermitian_part(Z * Z.adjoint()) / double(dof);
}

IsacProblem make_isac_problem(const Dims &dims, Index T, double P1, double P2, double alpha1, std::uint64_t seed)
{
    Dims d = dims;
    d.m = 0;
    IsacProblem p;
    p.ch = compose_effective(build_iid_scenario(d, derive_seed(seed, 0)), PhaseVector(0));
    p.S1 = random_pilots(d.nb, T, derive_seed(seed, 1));
    p.R_hs = sample_wishart(d.nb, d.nb, derive_seed(seed, 2));
    p.P1 = P1;
    p.P2 = P2;
    p.alpha1 = alpha1;
    p.alpha2 = 1.0 - alpha1;
    p.validate();
    return p;
}

SensingAux update_sensing_aux(const ComplexMatrix &F1, const ComplexMatrix &S1, const ComplexMatrix &R_hs)
{
    if (F1.cols() != S1.rows() || F1.rows() != R_hs.rows())
        throw std::domain_error("update_sensing_aux: shape mismatch");
    const Index T = S1.cols();
    const ComplexMatrix K = S1.adjoint() * F1.adjoint(); // T x Nb
    SensingAux a;
    a.U_s = solve_hpd(eye(T) + K * R_hs * K.adjoint(), K * R_hs);
    ComplexMatrix R = hermitian_part(R_hs);
    if (!is_hpd(R) || min_eigenvalue(R) <= kSensingEpsilon)
    {
        R.diagonal().array() += kSensingEpsilon;
        a.regularized = true;
    }
    a.W_s = hermitian_part(inverse_hpd(R) + K.adjoint() * K);
    return a;
}

ComplexMatrix sensing_mse(const ComplexMatrix &F1, const ComplexMatrix &S1, const ComplexMatrix &R_hs,
                          const ComplexMatrix &U_s)
{
    const ComplexMatrix K = S1.adjoint() * F1.adjoint();
    const ComplexMatrix D = eye(R_hs.rows()) - U_s.adjoint() * K;
    return D * R_hs * D.adjoint() + U_s.adjoint() * U_s;
}

SylvesterSystem isac_sylvester(const NormalEquations &comm, const SensingAux &sens, const ComplexMatrix &S1,
                               const ComplexMatrix &R_hs, double alpha1, double alpha2)
{
    SylvesterSystem s;
    s.A1 = alpha1 * comm.A;
    s.A2 = alpha2 * hermitian_part(R_hs);
    s.B2 = hermitian_part(S1 * sens.U_s * sens.W_s * sens.U_s.adjoint() * S1.adjoint());
    s.C = alpha1 * comm.C + alpha2 * R_hs * sens.W_s * sens.U_s.adjoint() * S1.adjoint();
    return s;
}

ComplexMatrix kronecker_operator(const SylvesterSystem &sys)
{
    const Index n = sys.A1.rows(), m = sys.B2.rows();
    ComplexMatrix K = ComplexMatrix::Zero(n * m, n * m);
    const ComplexMatrix Bt = sys.B2.transpose();
    for (Index j = 0; j < m; ++j)
    {
        K.block(j * n, j * n, n, n) += sys.A1;
        for (Index i = 0; i < m; ++i)
            K.block(i * n, j * n, n, n) += Bt(i, j) * sys.A2;
    }
    return hermitian_part(K);
}

namespace
{
ComplexMatrix unvec(const ComplexMatrix &v, Index rows, Index cols)
{
    return Eigen::Map<const ComplexMatrix>(v.data(), rows, cols);
}

ComplexMatrix vec(const ComplexMatrix &X)
{
    return Eigen::Map<const ComplexMatrix>(X.data(), X.size(), 1);
}
} // namespace

ComplexMatrix solve_f1_isac(const SylvesterSystem &sys, double lambda1)
{
    if (!(lambda1 >= 0.0))
        throw std::domain_error("solve_f1_isac: negative multiplier");
    const ComplexMatrix K = kronecker_operator(sys);
    return unvec(regularized_solve(K, vec(sys.C), lambda1), sys.C.rows(), sys.C.cols());
}

PowerSolveResult solve_f1_isac_constrained(const SylvesterSystem &sys, double P1)
{
    PowerSolveResult r = solve_power_constrained(kronecker_operator(sys), vec(sys.C), P1);
    r.F = unvec(r.F, sys.C.rows(), sys.C.cols());
    return r;
}

double sylvester_residual(const SylvesterSystem &sys, const ComplexMatrix &F1, double lambda1)
{
    const ComplexMatrix R = sys.A1 * F1 + lambda1 * F1 + sys.A2 * F1 * sys.B2 - sys.C;
    return R.norm() / std::max(sys.C.norm(), 1e-300);
}

namespace
{

struct Evaluated
{
    double mode_rate = 0.0;
    double R_c = 0.0;
    double R_s = 0.0;
    RateBundle rates;
};

Evaluated evaluate(const IsacProblem &prob, const PrecoderPair &p, Subproblem mode)
{
    Evaluated e;
    const RawRates rr = raw_rates(prob.ch, p.F1, p.F2);
    e.mode_rate = subproblem_rate(rr, mode);
    e.rates = bundle_from_raw(rr);
    e.R_c = mode == Subproblem::gn ? e.rates.r_gn : e.rates.r_ej;
    e.R_s = sensing_mi(p.F1, prob.S1, prob.R_hs);
    return e;
}

} // namespace

IsacRecord optimize_isac(const IsacProblem &prob, Subproblem mode, const InitSpec &init, const IsacStop &stop)
{
    prob.validate();
    const Index nb = prob.ch.H1.cols(), nc = prob.ch.H2.cols();
    const bool bar = mode == Subproblem::bar;
    Dims d{nb, nc, prob.ch.H1.rows(), prob.ch.G1.rows(), 0};
    PrecoderPair p = initial_precoders(d, Budgets{prob.P1, bar ? 0.0 : prob.P2});
    if (init.F1)
        p.F1 = *init.F1;
    if (init.F2 && !bar)
        p.F2 = *init.F2;
    if (bar)
        p.F2.setZero();

    IsacRecord rec;
    Evaluated ev = evaluate(prob, p, mode);
    double obj = prob.alpha1 * ev.mode_rate + prob.alpha2 * ev.R_s;
    rec.trace.push_back(obj);
    PrecoderPair best_p = p;
    double best = obj;

    int it = 0;
    bool converged = false;
    if (prob.P1 == 0.0 && (bar || prob.P2 == 0.0))
    {
        converged = true;
        it = 1;
    }
    for (; it < stop.max_outer && !converged; ++it)
    {
        const AuxState aux = update_aux(prob.ch, p, mode);
        const SensingAux sens = update_sensing_aux(p.F1, prob.S1, prob.R_hs);
        const SylvesterSystem sys =
            isac_sylvester(normal_equations(prob.ch, aux, 0), sens, prob.S1, prob.R_hs, prob.alpha1, prob.alpha2);
        PowerSolveResult r1 = solve_f1_isac_constrained(sys, prob.P1);
        if (r1.F.norm() > 0.0)
            rec.max_residual = std::max(rec.max_residual, sylvester_residual(sys, r1.F, r1.lambda));
        PrecoderPair next = p;
        next.F1 = r1.F;
        if (!bar && prob.P2 > 0.0)
        {
            const NormalEquations ne = normal_equations(prob.ch, aux, 1);
            next.F2 = solve_power_constrained(ne.A, ne.C, prob.P2).F;
        }
        p = next;
        ev = evaluate(prob, p, mode);
        const double cur = prob.alpha1 * ev.mode_rate + prob.alpha2 * ev.R_s;
        rec.trace.push_back(cur);
        if (cur > best)
        {
            best = cur;
            best_p = p;
        }
        converged = std::abs(cur - obj) <= stop.delta;
        obj = cur;
    }

    ev = evaluate(prob, best_p, mode);
    rec.sol.F1 = best_p.F1;
    rec.sol.F2 = best_p.F2;
    rec.sol.phi = PhaseVector(0);
    rec.sol.mode = mode;
    rec.sol.rates = ev.rates;
    rec.sol.objective = ev.mode_rate;
    rec.sol.trace = rec.trace;
    rec.sol.iterations = it;
    rec.sol.converged = converged;
    rec.R_c = ev.R_c;
    rec.R_s = ev.R_s;
    rec.weighted = best;
    return rec;
}

IsacRecord optimize_isac_scheme(const IsacProblem &prob, Scheme scheme, const InitSpec &init, const IsacStop &stop)
{
    if (scheme == Scheme::gn)
        return optimize_isac(prob, Subproblem::gn, init, stop);
    IsacRecord best;
    double best_val = 0.0;
    bool have = false;
    for (Subproblem mode : {Subproblem::bar, Subproblem::tilde, Subproblem::hat})
    {
        IsacRecord r = optimize_isac(prob, mode, init, stop);
        const double v = prob.alpha1 * r.R_c + prob.alpha2 * r.R_s;
        if (!have || v > best_val + 1e-9)
        {
            best = std::move(r);
            best_val = v;
            have = true;
        }
    }
    return best;
}

std::vector<ParetoPoint> pareto_sweep(const IsacProblem &tmpl, const std::vector<double> &alpha1_grid,
                                      Scheme scheme, const InitSpec &init, const IsacStop &stop)
{
    std::vector<double> grid = alpha1_grid;
    std::sort(grid.begin(), grid.end());
    std::vector<ParetoPoint> out;
    for (double a : grid)
    {
        if (!(a >= 0.0 && a <= 1.0))
            throw std::domain_error("pareto_sweep: weights must lie in [0, 1]");
        IsacProblem p = tmpl;
        p.alpha1 = a;
        p.alpha2 = 1.0 - a;
        const IsacRecord r = optimize_isac_scheme(p, scheme, init, stop);
        out.push_back(ParetoPoint{a, r.R_c, r.R_s});
    }
    return out;
}

std::vector<ParetoPoint> pareto_filter(std::vector<ParetoPoint> pts)
{
    std::sort(pts.begin(), pts.end(), [](const ParetoPoint &a, const ParetoPoint &b) {
        return a.R_c != b.R_c ? a.R_c > b.R_c : a.R_s > b.R_s;
    });
    std::vector<ParetoPoint> keep;
    double best_s = -1e300;
    for (const ParetoPoint &p : pts)
        if (p.R_s > best_s)
        {
            keep.push_back(p);
            best_s = p.R_s;
        }
    std::reverse(keep.begin(), keep.end());
    return keep;
}

std::vector<double> alpha_grid(double step)
{
    if (!(step > 0.0 && step <= 1.0))
        throw std::domain_error("alpha_grid: step must lie in (0, 1]");
    const int n = int(std::llround(1.0 / step));
    std::vector<double> g;
    for (int i = 0; i <= n; ++i)
        g.push_back(std::min(1.0, double(i) / double(n)));
    return g;
}

} // namespace risjam
