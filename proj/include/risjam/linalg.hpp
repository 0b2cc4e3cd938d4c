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

#pragma once

#include <Eigen/Dense>
#include <complex>

namespace risjam
{
using cd = std::complex<double>;
using Index = Eigen::Index;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

constexpr double kPi = 3.14159265358979323846;

// Asymmetry tolerance for user-supplied Hermitian matrices (relative Frobenius)
constexpr double kHermitianTol = 1e-9;

ComplexMatrix eye(Index n);

// (A + A^H) / 2
ComplexMatrix hermitian_part(const ComplexMatrix &A);

// ||A - A^H||_F / max(1, ||A||_F)
double asymmetry(const ComplexMatrix &A);

// Throws std::domain_error if any entry is NaN or Inf
void require_finite(const ComplexMatrix &A, const char *what);

// Throws std::domain_error if A is not square or its asymmetry exceeds kHermitianTol
void require_hermitian(const ComplexMatrix &A, const char *what);

// log det of a Hermitian positive definite matrix via Cholesky of the Hermitian part.
// Throws std::domain_error when the factorization fails.
double logdet_hpd(const ComplexMatrix &A);

// Inverse and solve for Hermitian positive definite matrices (Cholesky based)
ComplexMatrix inverse_hpd(const ComplexMatrix &A);
ComplexMatrix solve_hpd(const ComplexMatrix &A, const ComplexMatrix &B);

// True if the Hermitian part of A admits a Cholesky factorization
bool is_hpd(const ComplexMatrix &A);

// Extreme eigenvalues of the Hermitian part
double min_eigenvalue(const ComplexMatrix &A);
double max_eigenvalue(const ComplexMatrix &A);

// Largest eigenvalue by power iteration on a Hermitian PSD matrix
double power_iteration_lambda_max(const ComplexMatrix &A, double tol = 1e-8, int max_iter = 1000);

// Real part of Tr(A B)
double trace_product(const ComplexMatrix &A, const ComplexMatrix &B);

// Scaled identity of shape rows x cols (identity padded or truncated)
ComplexMatrix scaled_identity(Index rows, Index cols, double scale);

} // namespace risjam
