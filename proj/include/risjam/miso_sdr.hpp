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
#include "risjam/sdp_solver.hpp"
#include "risjam/wmmse.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace risjam
{

// Single-antenna UE and Eve. Rows 0..M-1 of each stack hold the cascaded
// RIS rows diag(h_r,k) H_br, the last row the direct link, so the effective
// row channel is wbar^H H_k with wbar = [conj(phi); 1].
struct MisoStacks
{
    ComplexMatrix Hu; // (M+1) x Nb
    ComplexMatrix He;
    ComplexMatrix Gu; // (M+1) x Nc
    ComplexMatrix Ge;
};

// Throws std::domain_error unless Nu = Ne = 1
MisoStacks stack_miso(const RawChannels &raw);

ComplexVector phases_to_wbar(const PhaseVector &phi);
PhaseVector wbar_to_phases(const ComplexVector &wbar);

// Quadratic forms of the four links. For the beamforming variant the matrices
// are hbar hbar^H (Nb x Nb or Nc x Nc); for the phase variant h_W h_W^H ((M+1)^2).
struct MisoQuadratics
{
    ComplexMatrix Hu, Gu, He, Ge;
};

MisoQuadratics beam_quadratics(const MisoStacks &s, const ComplexVector &wbar);
MisoQuadratics phase_quadratics(const MisoStacks &s, const ComplexVector &f1, const ComplexVector &f2);

// Tangent points of the bound -log a >= log t - t a + 1
struct TangentPoints
{
    double te = 1.0;
    double tu = 1.0;
};

// Builds the concave SDP for fixed tangents. Beamforming: blocks (R1, R2) with trace caps
// P1, P2 (bar pins P2 to 0). Phase: one unit-diagonal block W of size M+1.
SdpProblem build_beamforming_sdp(const MisoQuadratics &q, Subproblem mode, const TangentPoints &t,
                                 double P1, double P2);
SdpProblem build_phase_sdp(const MisoQuadratics &q, Subproblem mode, const TangentPoints &t);

enum class TangentTerm
{
    e,  // Eve: 1/(1 + Tr(He R1) + Tr(Ge R2))
    u,  // UE jammer only: 1/(1 + Tr(Gu R2))
    We, // 1/(1 + Tr((He + Ge) W))
    Wu  // 1/(1 + Tr(Gu W))
};

// Beamforming terms use (R1, R2); phase terms read W from R1 and ignore R2
double update_t(const MisoQuadratics &q, const ComplexMatrix &R1, const ComplexMatrix &R2, TangentTerm which);

// Relaxed subproblem objective with optimal tangents (the lifted rate)
double lifted_rate_beam(const MisoQuadratics &q, Subproblem mode, const ComplexMatrix &R1, const ComplexMatrix &R2);
double lifted_rate_phase(const MisoQuadratics &q, Subproblem mode, const ComplexMatrix &W);

enum class RecoveryKind
{
    phase, // unit modulus entries, last entry 1
    beam   // rescaled to ||xi||^2 = Tr(X)
};

struct RecoveryResult
{
    std::vector<ComplexVector> vectors;
    double score = 0.0;
    bool rank_one = false; // every input passed lambda2/lambda1 <= 1e-6
    int candidates = 0;
};

// Candidate 0 is built from the principal eigenvectors; candidates 1..count draw
// xi_b ~ CN(0, X_b) jointly for all blocks. Returns the best candidate under score.
RecoveryResult gaussian_randomization(const std::vector<ComplexMatrix> &X, int count, RecoveryKind kind,
                                      std::uint64_t seed,
                                      const std::function<double(const std::vector<ComplexVector> &)> &score);

// Rank test used before randomization
bool is_rank_one(const ComplexMatrix &X, double ratio = 1e-6);

struct MisoStop
{
    int max_outer = 50;
    double delta = 1e-4;   // nats on the subproblem rate
    int inner_max = 20;    // (SDP, t) alternations
    double inner_tol = 1e-6;
    int randomizations = 1000;
    bool optimize_phases = true;
};

struct MisoTrace
{
    std::vector<std::vector<double>> lifted; // per inner loop: start value, then one per alternation
    std::vector<double> rate;     // true subproblem rate after each outer iteration
    int sdp_calls = 0;
};

SolutionRecord alternating_miso_subproblem(const RawChannels &raw, const Budgets &budgets, Subproblem mode,
                                           const ConicSolverAdapter &solver, const InitSpec &init = {},
                                           const MisoStop &stop = {}, MisoTrace *trace = nullptr);

// EJ: hat, tilde and bar runs, best R_EJ kept (ties favour bar). GN: the gn pair.
SolutionRecord alternating_miso(const RawChannels &raw, const Budgets &budgets, Scheme scheme,
                                const ConicSolverAdapter &solver, const InitSpec &init = {},
                                const MisoStop &stop = {});

} // namespace risjam
