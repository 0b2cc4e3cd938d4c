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

#include "risjam/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace risjam
{

ComplexMatrix eye(Index n)
{
    return ComplexMatrix::Identity(n, n);
}

ComplexMatrix hermitian_part(const ComplexMatrix &A)
{
    return (A + A.adjoint()) * 0.5;
}

double asymmetry(const ComplexMatrix &A)
{
    if (A.rows() != A.cols())
        return INFINITY;
    double nrm = A.norm();
    return (A - A.adjoint()).norm() / std::max(1.0, nrm);
}

void require_finite(const ComplexMatrix &A, const char *what)
{
    if (!A.allFinite())
        throw std::domain_error(std::string(what) + ": non-finite entry");
}

void require_hermitian(const ComplexMatrix &A, const char *what)
{
    if (A.rows() != A.cols())
        throw std::domain_error(std::string(what) + ": matrix is not square");
    require_finite(A, what);
    if (asymmetry(A) > kHermitianTol)
        throw std::domain_error(std::string(what) + ": matrix is not Hermitian");
}

double logdet_hpd(const ComplexMatrix &A)
{
    if (A.rows() != A.cols())
        throw std::domain_error("logdet_hpd: matrix is not square");
    if (A.rows() == 0)
        return 0.0;
    require_finite(A, "logdet_hpd");
    Eigen::LLT<ComplexMatrix> llt(hermitian_part(A));
    if (llt.info() != Eigen::Success)
        throw std::domain_error("logdet_hpd: matrix is not positive definite");
    const auto &L = llt.matrixLLT();
    double s = 0.0;
    for (Index i = 0; i < L.rows(); ++i)
        s += std::log(L(i, i).real());
    return 2.0 * s;
}

ComplexMatrix solve_hpd(const ComplexMatrix &A, const ComplexMatrix &B)
{
    if (A.rows() == 0)
        return ComplexMatrix::Zero(0, B.cols());
    Eigen::LLT<ComplexMatrix> llt(hermitian_part(A));
    if (llt.info() != Eigen::Success)
        throw std::domain_error("solve_hpd: matrix is not positive definite");
    return llt.solve(B);
}

ComplexMatrix inverse_hpd(const ComplexMatrix &A)
{
    return hermitian_part(solve_hpd(A, eye(A.rows())));
}

bool is_hpd(const ComplexMatrix &A)
{
    if (A.rows() != A.cols() || !A.allFinite())
        return false;
    if (A.rows() == 0)
        return true;
    Eigen::LLT<ComplexMatrix> llt(hermitian_part(A));
    return llt.info() == Eigen::Success;
}

double min_eigenvalue(const ComplexMatrix &A)
{
    if (A.rows() == 0)
        return 0.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(A), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

double max_eigenvalue(const ComplexMatrix &A)
{
    if (A.rows() == 0)
        return 0.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(A), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(A.rows() - 1);
}

double power_iteration_lambda_max(const ComplexMatrix &A, double tol, int max_iter)
{
    const Index n = A.rows();
    if (n == 0)
        return 0.0;
    ComplexVector v = ComplexVector::Ones(n) / std::sqrt(double(n));
    double lambda = 0.0;
    for (int it = 0; it < max_iter; ++it)
    {
        ComplexVector w = A * v;
        double nrm = w.norm();
        if (nrm == 0.0)
            return 0.0;
        double next = v.dot(w).real();
        v = w / nrm;
        if (std::abs(next - lambda) <= tol * std::max(1.0, std::abs(next)))
        {
            lambda = next;
            break;
        }
        lambda = next;
    }
    return lambda;
}

double trace_product(const ComplexMatrix &A, const ComplexMatrix &B)
{
    // Tr(A B) = sum_ij A_ij B_ji
    return (A.array() * B.transpose().array()).sum().real();
}

ComplexMatrix scaled_identity(Index rows, Index cols, double scale)
{
    ComplexMatrix F = ComplexMatrix::Zero(rows, cols);
    for (Index i = 0; i < std::min(rows, cols); ++i)
        F(i, i) = scale;
    return F;
}

} // namespace risjam
