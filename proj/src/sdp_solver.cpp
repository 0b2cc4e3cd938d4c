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

#include "risjam/sdp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace risjam
{

namespace
{

constexpr double kArmijo = 1e-4;

bool has_coeff(const std::vector<ComplexMatrix> &c, std::size_t b)
{
    return b < c.size() && c[b].size() > 0;
}

void normalize_rows(ComplexMatrix &V)
{
    for (Index i = 0; i < V.rows(); ++i)
    {
        const double n = V.row(i).norm();
        if (n > 0.0)
            V.row(i) /= n;
        else
        {
            V.row(i).setZero();
            V(i, i % V.cols()) = 1.0;
        }
    }
}

// feasible factor of a unit-diagonal PSD matrix
ComplexMatrix unit_factor(const ComplexMatrix &W)
{
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(W));
    ComplexMatrix V = es.eigenvectors() * es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();
    normalize_rows(V);
    return V;
}

double real_inner(const ComplexMatrix &A, const ComplexMatrix &B)
{
    return (A.adjoint() * B).trace().real();
}

// tangent component of 2 G V on the product of spheres
ComplexMatrix sphere_gradient(const ComplexMatrix &G, const ComplexMatrix &V)
{
    ComplexMatrix R = 2.0 * G * V;
    for (Index i = 0; i < R.rows(); ++i)
    {
        const double radial = (R.row(i) * V.row(i).adjoint())(0, 0).real();
        R.row(i) -= radial * V.row(i);
    }
    return R;
}

} // namespace

void SdpProblem::validate() const
{
    for (const SdpBlock &b : blocks)
    {
        if (b.size < 1)
            throw std::domain_error("SdpProblem: block size must be positive");
        if (b.constraint == BlockConstraint::trace_cap && !(b.cap >= 0.0 && std::isfinite(b.cap)))
            throw std::domain_error("SdpProblem: trace cap must be finite and nonnegative");
    }
    auto check = [&](const ComplexMatrix &C, std::size_t b, const char *what) {
        if (C.rows() != blocks[b].size || C.cols() != blocks[b].size)
            throw std::domain_error(std::string("SdpProblem: ") + what + " shape mismatch");
        require_finite(C, what);
        require_hermitian(C, what);
    };
    for (const SdpLogTerm &t : logs)
    {
        if (!(t.weight >= 0.0) || !std::isfinite(t.weight))
            throw std::domain_error("SdpProblem: log weights must be nonnegative");
        if (!(t.offset > 0.0))
            throw std::domain_error("SdpProblem: log offsets must be positive");
        if (t.coeff.size() > blocks.size())
            throw std::domain_error("SdpProblem: too many log coefficients");
        for (std::size_t b = 0; b < t.coeff.size(); ++b)
            if (t.coeff[b].size() > 0)
                check(t.coeff[b], b, "log coefficient");
    }
    if (linear.size() > blocks.size())
        throw std::domain_error("SdpProblem: too many linear terms");
    for (std::size_t b = 0; b < linear.size(); ++b)
        if (linear[b].size() > 0)
            check(linear[b], b, "linear term");
    if (!start.empty())
    {
        if (start.size() != blocks.size())
            throw std::domain_error("SdpProblem: warm start needs one matrix per block");
        for (std::size_t b = 0; b < start.size(); ++b)
            if (start[b].rows() != blocks[b].size || start[b].cols() != blocks[b].size)
                throw std::domain_error("SdpProblem: warm start shape mismatch");
    }
}

double SdpProblem::objective(const std::vector<ComplexMatrix> &X) const
{
    double f = constant;
    for (const SdpLogTerm &t : logs)
    {
        double arg = t.offset;
        for (std::size_t b = 0; b < t.coeff.size(); ++b)
            if (t.coeff[b].size() > 0)
                arg += trace_product(t.coeff[b], X[b]);
        if (!(arg > 0.0))
            return -std::numeric_limits<double>::infinity();
        f += t.weight * std::log(arg);
    }
    for (std::size_t b = 0; b < linear.size(); ++b)
        if (linear[b].size() > 0)
            f += trace_product(linear[b], X[b]);
    return f;
}

std::vector<ComplexMatrix> SdpProblem::gradient(const std::vector<ComplexMatrix> &X) const
{
    std::vector<ComplexMatrix> G(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b)
        G[b] = has_coeff(linear, b) ? hermitian_part(linear[b])
                                    : ComplexMatrix::Zero(blocks[b].size, blocks[b].size);
    for (const SdpLogTerm &t : logs)
    {
        double arg = t.offset;
        for (std::size_t b = 0; b < t.coeff.size(); ++b)
            if (t.coeff[b].size() > 0)
                arg += trace_product(t.coeff[b], X[b]);
        for (std::size_t b = 0; b < t.coeff.size(); ++b)
            if (t.coeff[b].size() > 0)
                G[b] += (t.weight / arg) * hermitian_part(t.coeff[b]);
    }
    return G;
}

bool SdpProblem::feasible(const std::vector<ComplexMatrix> &X, double tol) const
{
    if (X.size() != blocks.size())
        return false;
    for (std::size_t b = 0; b < blocks.size(); ++b)
    {
        const ComplexMatrix &x = X[b];
        if (x.rows() != blocks[b].size || x.cols() != blocks[b].size)
            return false;
        if (asymmetry(x) > tol)
            return false;
        const double scale = std::max(1.0, x.norm());
        if (min_eigenvalue(x) < -tol * scale)
            return false;
        if (blocks[b].constraint == BlockConstraint::trace_cap)
        {
            if (x.trace().real() > blocks[b].cap * (1.0 + tol) + tol * 1e-3)
                return false;
        }
        else
        {
            for (Index m = 0; m < x.rows(); ++m)
                if (std::abs(x(m, m) - cd(1.0, 0.0)) > tol)
                    return false;
        }
    }
    return true;
}

ComplexMatrix project_trace_cap(const ComplexMatrix &X, double cap)
{
    const Index n = X.rows();
    if (cap <= 0.0)
        return ComplexMatrix::Zero(n, n);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(X));
    RealVector lam = es.eigenvalues().cwiseMax(0.0);
    if (lam.sum() > cap)
    {
        std::vector<double> s(lam.data(), lam.data() + n);
        std::sort(s.begin(), s.end(), std::greater<double>());
        double acc = 0.0, tau = 0.0;
        for (Index k = 0; k < n; ++k)
        {
            acc += s[std::size_t(k)];
            const double t = (acc - cap) / double(k + 1);
            if (k + 1 == n || s[std::size_t(k + 1)] <= t)
            {
                tau = t;
                break;
            }
        }
        lam = (lam.array() - tau).cwiseMax(0.0);
        // cancellation in lam - tau when the gradient step dwarfs the cap
        const double sum = lam.sum();
        if (sum > cap)
            lam *= cap / sum;
    }
    return es.eigenvectors() * lam.cast<cd>().asDiagonal() * es.eigenvectors().adjoint();
}

SdpSolution solve_sdp_bundled(const SdpProblem &prob, const SpgOptions &opt)
{
    prob.validate();
    const std::size_t nb = prob.blocks.size();
    auto is_unit = [&](std::size_t b) { return prob.blocks[b].constraint == BlockConstraint::unit_diagonal; };

    std::vector<ComplexMatrix> X(nb), V(nb);
    for (std::size_t b = 0; b < nb; ++b)
    {
        const Index n = prob.blocks[b].size;
        if (is_unit(b))
        {
            V[b] = prob.start.empty() ? eye(n) : unit_factor(prob.start[b]);
            X[b] = V[b] * V[b].adjoint();
        }
        else
        {
            X[b] = prob.start.empty() ? eye(n) * (prob.blocks[b].cap / double(n))
                                      : project_trace_cap(prob.start[b], prob.blocks[b].cap);
        }
    }

    SdpSolution sol;
    double f = prob.objective(X);
    if (!std::isfinite(f))
        throw std::domain_error("solve_sdp_bundled: objective undefined at the start point");
    std::vector<ComplexMatrix> G = prob.gradient(X);

    double gnorm = 0.0, xscale = 0.0;
    for (std::size_t b = 0; b < nb; ++b)
    {
        gnorm += G[b].squaredNorm();
        xscale += is_unit(b) ? double(prob.blocks[b].size) : prob.blocks[b].cap;
    }
    gnorm = std::sqrt(gnorm);
    double step = gnorm > 0.0 ? std::max(xscale, 1.0) / gnorm : 1.0;

    bool any_unit = false;
    for (std::size_t b = 0; b < nb; ++b)
        any_unit = any_unit || is_unit(b);

    std::vector<double> recent;
    std::vector<ComplexMatrix> Xn(nb), Vn(nb), R(nb);
    for (std::size_t b = 0; b < nb; ++b)
        if (is_unit(b))
            R[b] = sphere_gradient(G[b], V[b]);
    int it = 0;
    for (; it < opt.max_iter; ++it)
    {
        bool accepted = false;
        double fn = f;
        for (int bt = 0; bt < 200; ++bt)
        {
            double predicted = 0.0;
            for (std::size_t b = 0; b < nb; ++b)
            {
                if (is_unit(b))
                {
                    Vn[b] = V[b] + step * R[b];
                    normalize_rows(Vn[b]);
                    Xn[b] = Vn[b] * Vn[b].adjoint();
                }
                else
                {
                    Xn[b] = project_trace_cap(X[b] + step * G[b], prob.blocks[b].cap);
                }
                predicted += trace_product(G[b], Xn[b] - X[b]);
            }
            if (predicted > 0.0)
            {
                fn = prob.objective(Xn);
                if (std::isfinite(fn) && fn >= f + kArmijo * predicted)
                {
                    accepted = true;
                    break;
                }
            }
            else if (!any_unit)
            {
                break;
            }
            step *= 0.5;
        }
        if (!accepted)
        {
            sol.converged = true;
            break;
        }

        std::vector<ComplexMatrix> Gn = prob.gradient(Xn);
        double ss = 0.0, sy = 0.0;
        for (std::size_t b = 0; b < nb; ++b)
        {
            if (is_unit(b))
            {
                // spectral pair in the factor variable
                ComplexMatrix Rn = sphere_gradient(Gn[b], Vn[b]);
                const ComplexMatrix dV = Vn[b] - V[b];
                ss += dV.squaredNorm();
                sy += real_inner(dV, Rn - R[b]);
                R[b] = std::move(Rn);
            }
            else
            {
                const ComplexMatrix dX = Xn[b] - X[b];
                ss += dX.squaredNorm();
                sy += real_inner(dX, Gn[b] - G[b]);
            }
        }
        const double gain = fn - f;
        X.swap(Xn);
        V.swap(Vn);
        G.swap(Gn);
        f = fn;
        step = sy < 0.0 ? std::clamp(ss / -sy, 1e-30, 1e30) : 2.0 * step;

        recent.push_back(gain);
        if (int(recent.size()) > opt.window)
            recent.erase(recent.begin());
        double sum = 0.0;
        for (double g : recent)
            sum += g;
        if (int(recent.size()) == opt.window && sum <= opt.rel_tol * (1.0 + std::abs(f)))
        {
            sol.converged = true;
            ++it;
            break;
        }
    }
    for (std::size_t b = 0; b < nb; ++b)
        if (is_unit(b))
            for (Index m = 0; m < X[b].rows(); ++m)
                X[b](m, m) = 1.0;
    sol.X = std::move(X);
    sol.objective = prob.objective(sol.X);
    sol.iterations = it;
    return sol;
}

ConicSolverAdapter bundled_solver(const SpgOptions &opt)
{
    return [opt](const SdpProblem &p) { return solve_sdp_bundled(p, opt); };
}

} // namespace risjam
