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

#include "risjam/channel.hpp"
#include "risjam/rates.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace risjam
{

// Subproblem whose rate is maximized:
//   tilde: log|I+H1Q1H1^H+H2Q2H2^H| - log|E3|
//   hat:   log|I+H1Q1H1^H| + log|I+G2Q2G2^H| - log|E3|
//   gn:    log|I+H1Q1H1^H (H2Q2H2^H+I)^-1| + log|I+G2Q2G2^H| - log|E3|
//   bar:   hat with F2 pinned to 0
// with E3 = I + G1Q1G1^H + G2Q2G2^H.
enum class Subproblem
{
    tilde,
    hat,
    gn,
    bar
};

std::string to_string(Subproblem s);
Subproblem subproblem_from_string(const std::string &s);

// Jamming scheme: encoded jamming or Gaussian noise
enum class Scheme
{
    ej,
    gn
};

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string &s);

// Unclamped rate of a subproblem
double subproblem_rate(const RawRates &r, Subproblem mode);

// Receive filters and weights. tilde uses (U1, W1, U2, W2, W3); hat and bar use
// (U_H1, W_H1, U_G2, W_G2, W3); gn uses (U1, W1, U_G2, W_G2, W3).
struct AuxState
{
    Subproblem mode = Subproblem::tilde;
    ComplexMatrix U1, W1; // UE, signal F1 with jammer interference
    ComplexMatrix U2, W2; // UE, jammer stream (Nu x Nc, Nc x Nc)
    ComplexMatrix U_H1, W_H1; // UE, signal F1 interference free
    ComplexMatrix U_G2, W_G2; // Eve, jammer stream
    ComplexMatrix W3;         // Eve, total received covariance E3^-1
};

AuxState update_aux_tilde(const ChannelSet &ch, const PrecoderPair &p);
AuxState update_aux_hat(const ChannelSet &ch, const PrecoderPair &p);
AuxState update_aux_gn(const ChannelSet &ch, const PrecoderPair &p);
AuxState update_aux(const ChannelSet &ch, const PrecoderPair &p, Subproblem mode);

// Lower bound sum_i [log|W_i| - Tr(W_i E_i) + d_i] at the given auxiliaries; equals the
// unclamped subproblem rate when the auxiliaries are optimal for (F1, F2, phi)
double aux_lower_bound(const ChannelSet &ch, const PrecoderPair &p, const AuxState &aux);

// Weighted MSE sum sum_i Tr(W_i E_i) (the quantity minimized in the precoder and phase steps)
double weighted_mse(const ChannelSet &ch, const PrecoderPair &p, const AuxState &aux);

// Normal equations (A + lambda I) F_k = C for precoder k (0 -> F1, 1 -> F2)
struct NormalEquations
{
    ComplexMatrix A;
    ComplexMatrix C;
};

NormalEquations normal_equations(const ChannelSet &ch, const AuxState &aux, int which);

struct PrecoderSolve
{
    PrecoderPair p;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};

// Closed-form precoders with bisection on the multipliers. bar mode returns F2 = 0.
PrecoderSolve solve_precoders(const ChannelSet &ch, const AuxState &aux, double P1, double P2,
                              Subproblem mode);

// Quadratic model of the weighted MSE in phi:
//   sum Tr(W E) = phi^H Xi phi + 2 Re{phi^H d*} + C_t
struct MmProblem
{
    ComplexMatrix Xi;
    ComplexVector d;
    double C_t = 0.0;
    double lambda_max = 0.0;

    // phi^H Xi phi + 2 Re{phi^H d*}
    double f(const PhaseVector &phi) const;
    double objective(const PhaseVector &phi) const { return f(phi) + C_t; }
};

MmProblem build_mm_problem(const RawChannels &raw, const PrecoderPair &p, const AuxState &aux);

// One majorization step: q = (lambda_max I - Xi) phi - d*, phi'_m = q_m / |q_m|;
// entries with |q_m| < 1e-14 keep their previous value
PhaseVector mm_phase_step(const MmProblem &prob, const PhaseVector &phi);

struct Budgets
{
    double P1 = 0.0;
    double P2 = 0.0;
};

struct InitSpec
{
    std::uint64_t seed = 0;
    std::optional<ComplexMatrix> F1;
    std::optional<ComplexMatrix> F2;
    std::optional<PhaseVector> phi;
};

struct StopRule
{
    double delta = 1e-4;  // nats on the subproblem rate
    int max_outer = 200;
    int mm_max = 50;
    double mm_tol = 1e-8; // relative surrogate improvement
    bool optimize_phases = true;
    int restarts = 1;
};

struct SolutionRecord
{
    ComplexMatrix F1;
    ComplexMatrix F2;
    PhaseVector phi;
    RateBundle rates;
    Subproblem mode = Subproblem::tilde; // subproblem that produced this point
    double objective = 0.0;              // unclamped subproblem rate at the solution
    std::vector<double> trace;           // objective after each outer iteration (entry 0: initial point)
    int iterations = 0;
    int mm_steps = 0;
    bool converged = false;
};

// Starting point: F_k = sqrt(P_k / N_k) I, phi uniform from the seed unless given
PrecoderPair initial_precoders(const Dims &dims, const Budgets &b);

SolutionRecord optimize_subproblem(const RawChannels &raw, const Budgets &budgets, Subproblem mode,
                                   const InitSpec &init = {}, const StopRule &stop = {});

// Runs tilde, hat and bar from the same start and keeps the largest R_EJ
// (ties within 1e-9 favour bar)
SolutionRecord optimize_ej(const RawChannels &raw, const Budgets &budgets, const InitSpec &init = {},
                           const StopRule &stop = {});

} // namespace risjam
