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

#include "risjam/power_solve.hpp"
#include "risjam/wmmse.hpp"

#include <cstdint>
#include <vector>

namespace risjam
{

// Dual-function BS without RIS. The sensing receiver observes
// Y_s^H = S1^H F1^H H_s^H + N_s^H with columns of H_s^H ~ CN(0, R_hs).
struct IsacProblem
{
    ChannelSet ch;     // M = 0
    ComplexMatrix S1;  // Nb x T pilots
    ComplexMatrix R_hs; // Nb x Nb
    double P1 = 0.0;
    double P2 = 0.0;
    double alpha1 = 1.0;
    double alpha2 = 0.0;

    // Throws std::domain_error on shapes, weights off the simplex, or R_hs not PSD
    void validate() const;
};

// Nb x T entries i.i.d. CN(0,1)
ComplexMatrix random_pilots(Index nb, Index T, std::uint64_t seed);

// S(i, t) = exp(-2 pi j i t / T); rows are orthogonal with S S^H = T I when Nb <= T
ComplexMatrix dft_pilots(Index nb, Index T);

// Wishart with identity scale and dof degrees of freedom, divided by dof
ComplexMatrix sample_wishart(Index n, Index dof, std::uint64_t seed);

// Trial instance: i.i.d. CN(0,1) channels (M = 0), random pilots and Wishart R_hs
IsacProblem make_isac_problem(const Dims &dims, Index T, double P1, double P2, double alpha1, std::uint64_t seed);

constexpr double kSensingEpsilon = 1e-10;

struct SensingAux
{
    ComplexMatrix U_s; // T x Nb
    ComplexMatrix W_s; // Nb x Nb
    bool regularized = false; // R_hs + eps I was used for W_s
};

// U_s = (S1^H F1^H R F1 S1 + I)^-1 S1^H F1^H R; W_s = (E_s)^-1 = R^-1 + F1 S1 S1^H F1^H
SensingAux update_sensing_aux(const ComplexMatrix &F1, const ComplexMatrix &S1, const ComplexMatrix &R_hs);

// E_s(U_s, F1) for the sensing model
ComplexMatrix sensing_mse(const ComplexMatrix &F1, const ComplexMatrix &S1, const ComplexMatrix &R_hs,
                          const ComplexMatrix &U_s);

// A1 F1 + A2 F1 B2 = C with A1 = alpha1 A_comm (+ lambda I at solve time), A2 = alpha2 R_hs,
// B2 = S1 U_s W_s U_s^H S1^H, C = alpha1 C_comm + alpha2 R_hs W_s U_s^H S1^H
struct SylvesterSystem
{
    ComplexMatrix A1, A2, B2, C;
};

SylvesterSystem isac_sylvester(const NormalEquations &comm, const SensingAux &sens, const ComplexMatrix &S1,
                               const ComplexMatrix &R_hs, double alpha1, double alpha2);

// Kronecker operator I (x) A1 + B2^T (x) A2 (Hermitian PSD)
ComplexMatrix kronecker_operator(const SylvesterSystem &sys);

// F1 for a given multiplier via the vectorized system
ComplexMatrix solve_f1_isac(const SylvesterSystem &sys, double lambda1);

// Smallest feasible multiplier under ||F1||^2 <= P1
PowerSolveResult solve_f1_isac_constrained(const SylvesterSystem &sys, double P1);

// ||(A1 + lambda I) F + A2 F B2 - C||_F / max(||C||_F, tiny)
double sylvester_residual(const SylvesterSystem &sys, const ComplexMatrix &F1, double lambda1);

struct IsacStop
{
    double delta = 1e-6; // on the weighted objective
    int max_outer = 500;
};

struct IsacRecord
{
    SolutionRecord sol;
    double R_c = 0.0;  // R_EJ (ej modes) or R_GN (gn mode) at the solution, nats
    double R_s = 0.0;  // sensing MI, nats
    double weighted = 0.0; // alpha1 * R_mode + alpha2 * R_s (unclamped mode rate)
    std::vector<double> trace; // weighted objective per outer iteration
    double max_residual = 0.0; // worst Sylvester residual over all F1 updates
};

IsacRecord optimize_isac(const IsacProblem &prob, Subproblem mode, const InitSpec &init = {},
                         const IsacStop &stop = {});

// EJ: bar, tilde and hat candidates, best alpha1 R_EJ + alpha2 R_s kept; GN: the gn mode
IsacRecord optimize_isac_scheme(const IsacProblem &prob, Scheme scheme, const InitSpec &init = {},
                                const IsacStop &stop = {});

struct ParetoPoint
{
    double alpha1 = 0.0;
    double R_c = 0.0;
    double R_s = 0.0;
};

// One optimization per grid point (alpha2 = 1 - alpha1), sorted by alpha1
std::vector<ParetoPoint> pareto_sweep(const IsacProblem &tmpl, const std::vector<double> &alpha1_grid,
                                      Scheme scheme, const InitSpec &init = {}, const IsacStop &stop = {});

// Upper-right staircase: sorted by increasing R_c with strictly decreasing R_s
std::vector<ParetoPoint> pareto_filter(std::vector<ParetoPoint> pts);

// 0, step, 2 step, ..., 1
std::vector<double> alpha_grid(double step);

} // namespace risjam
