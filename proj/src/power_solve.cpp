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

#include "risjam/power_solve.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace risjam
{

ComplexMatrix regularized_solve(const ComplexMatrix &A, const ComplexMatrix &C, double lambda)
{
    ComplexMatrix M = hermitian_part(A);
    M.diagonal().array() += lambda;
    return M.partialPivLu().solve(C);
}

PowerSolveResult solve_power_constrained(const ComplexMatrix &A, const ComplexMatrix &C, double budget)
{
    const Index n = A.rows();
    if (A.cols() != n || C.rows() != n)
        throw std::domain_error("solve_power_constrained: shape mismatch");
    require_finite(A, "solve_power_constrained: A");
    require_finite(C, "solve_power_constrained: C");
    if (!(budget >= 0.0))
        throw std::domain_error("solve_power_constrained: negative budget");

    PowerSolveResult res;
    res.F = ComplexMatrix::Zero(n, C.cols());
    if (n == 0 || budget == 0.0 || C.squaredNorm() == 0.0)
        return res;

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(A));
    if (es.info() != Eigen::Success)
        throw std::runtime_error("solve_power_constrained: eigendecomposition failed");
    RealVector d = es.eigenvalues().cwiseMax(0.0);
    const ComplexMatrix &V = es.eigenvectors();
    ComplexMatrix Ct = V.adjoint() * C;

    const double dmax = d.maxCoeff();
    const double ctot = Ct.squaredNorm();
    std::vector<double> c2(static_cast<std::size_t>(n), 0.0);
    bool singular_in_range = true;
    for (Index i = 0; i < n; ++i)
    {
        c2[std::size_t(i)] = Ct.row(i).squaredNorm();
        if (d(i) <= 1e-12 * dmax)
        {
            if (c2[std::size_t(i)] <= 1e-20 * ctot)
            {
                // null direction with no target component: minimum-norm choice
                c2[std::size_t(i)] = 0.0;
                Ct.row(i).setZero();
            }
            else
            {
                singular_in_range = false;
            }
            if (dmax == 0.0 || d(i) <= 1e-12 * dmax)
                d(i) = 0.0;
        }
    }

    auto trace_at = [&](double lam) {
        double t = 0.0;
        for (Index i = 0; i < n; ++i)
        {
            const double ci = c2[std::size_t(i)];
            if (ci == 0.0)
                continue;
            const double den = d(i) + lam;
            if (den <= 0.0)
                return std::numeric_limits<double>::infinity();
            t += ci / (den * den);
        }
        return t;
    };
    auto solution_at = [&](double lam) {
        ComplexMatrix Y = Ct;
        for (Index i = 0; i < n; ++i)
        {
            const double den = d(i) + lam;
            if (c2[std::size_t(i)] == 0.0 || den <= 0.0)
                Y.row(i).setZero();
            else
                Y.row(i) /= den;
        }
        return ComplexMatrix(V * Y);
    };

    if (singular_in_range)
    {
        const double t0 = trace_at(0.0);
        if (t0 <= budget)
        {
            res.F = solution_at(0.0);
            res.lambda = 0.0;
            res.trace = res.F.squaredNorm();
            return res;
        }
    }

    double lo = 0.0, hi = 1.0;
    int it = 0;
    while (trace_at(hi) > budget)
    {
        lo = hi;
        hi *= 2.0;
        if (++it > 2100)
            throw std::runtime_error("solve_power_constrained: bracket expansion failed");
    }
    while (hi - lo > 1e-13 * hi && it < 4000)
    {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        if (trace_at(mid) > budget)
            lo = mid;
        else
            hi = mid;
        ++it;
    }
    res.lambda = hi;
    res.F = solution_at(hi);
    res.trace = res.F.squaredNorm();
    res.iterations = it;
    if (res.trace > budget)
        res.F *= std::sqrt(budget / res.trace), res.trace = res.F.squaredNorm();
    return res;
}

} // namespace risjam
