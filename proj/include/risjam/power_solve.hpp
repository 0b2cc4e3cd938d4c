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

namespace risjam
{

struct PowerSolveResult
{
    ComplexMatrix F;
    double lambda = 0.0;
    double trace = 0.0; // ||F||_F^2
    int iterations = 0;
};

// Solves min_F Tr(F^H A F) - 2 Re Tr(F^H C) subject to ||F||_F^2 <= budget for a
// Hermitian PSD A: F(lambda) = (A + lambda I)^-1 C with the smallest lambda >= 0
// that is feasible. At lambda = 0 a singular A is handled by the minimum-norm
// solution when C lies in its range. The trace is monotone in lambda and is
// evaluated in the eigenbasis of A; the bracket starts at [0, 1] and the upper
// end doubles until feasible, then bisection runs to 1e-13 relative width.
PowerSolveResult solve_power_constrained(const ComplexMatrix &A, const ComplexMatrix &C, double budget);

// (A + lambda I)^-1 C evaluated directly
ComplexMatrix regularized_solve(const ComplexMatrix &A, const ComplexMatrix &C, double lambda);

} // namespace risjam
