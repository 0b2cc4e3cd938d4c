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

#include "risjam/linalg.hpp"

#include <functional>
#include <vector>

namespace risjam
{

enum class BlockConstraint
{
    trace_cap,    // X PSD, Tr(X) <= cap
    unit_diagonal // X PSD, X_mm = 1
};

struct SdpBlock
{
    Index size = 0;
    BlockConstraint constraint = BlockConstraint::trace_cap;
    double cap = 0.0;
};

// weight * log(offset + sum_b Tr(coeff[b] X_b)); an empty coeff[b] stands for zero
struct SdpLogTerm
{
    double weight = 1.0;
    double offset = 1.0;
    std::vector<ComplexMatrix> coeff;
};

// maximize sum_i logs_i + sum_b Tr(linear[b] X_b) + constant over the blocks.
// Concave whenever every weight is nonnegative.
struct SdpProblem
{
    std::vector<SdpBlock> blocks;
    std::vector<SdpLogTerm> logs;
    std::vector<ComplexMatrix> linear;
    double constant = 0.0;
    std::vector<ComplexMatrix> start; // optional warm start, one per block

    // Throws std::domain_error on shape, Hermitian or sign violations
    void validate() const;

    double objective(const std::vector<ComplexMatrix> &X) const;

    // Hermitian gradient with respect to each block
    std::vector<ComplexMatrix> gradient(const std::vector<ComplexMatrix> &X) const;

    // PSD within tol (scaled), trace caps and unit diagonals within tol relative
    bool feasible(const std::vector<ComplexMatrix> &X, double tol = 1e-6) const;
};

struct SdpSolution
{
    std::vector<ComplexMatrix> X;
    double objective = 0.0;
    int iterations = 0;
    bool converged = false;
};

using ConicSolverAdapter = std::function<SdpSolution(const SdpProblem &)>;

struct SpgOptions
{
    int max_iter = 5000;
    double rel_tol = 1e-12; // summed relative ascent over the last window
    int window = 10;
};

// Projected spectral gradient on trace-capped blocks and a row-normalized
// factorization W = V V^H on unit-diagonal blocks; monotone from the warm start.
SdpSolution solve_sdp_bundled(const SdpProblem &prob, const SpgOptions &opt = {});

ConicSolverAdapter bundled_solver(const SpgOptions &opt = {});

// Euclidean projection onto {X PSD, Tr X <= cap}
ComplexMatrix project_trace_cap(const ComplexMatrix &X, double cap);

} // namespace risjam
