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

#include <string>

namespace risjam
{

// Precoders F1 (Nb x d1), F2 (Nc x d2) and their budgets; Q_k = F_k F_k^H
struct PrecoderPair
{
    ComplexMatrix F1;
    ComplexMatrix F2;
    double P1 = 0.0;
    double P2 = 0.0;

    // Throws std::domain_error if a trace exceeds its budget by more than 1e-9 relative
    void check_feasible() const;
};

// Which expression attains max(min(R_hat, R_tilde), R_bar)
enum class EjBranch
{
    hat,
    tilde,
    bar
};

std::string to_string(EjBranch b);

// Secrecy rates in nats, all clamped at zero
struct RateBundle
{
    double r_hat = 0.0;
    double r_tilde = 0.0;
    double r_bar = 0.0;
    double r_ej = 0.0;
    double r_gn = 0.0;
    EjBranch branch = EjBranch::bar;
};

// Unclamped values. Primary and alternate forms of the GN and tilde rates come
// from different determinant factorizations.
struct RawRates
{
    double hat = 0.0;
    double tilde = 0.0;      // log|I+H1Q1H1^H+H2Q2H2^H| - log|E3|
    double tilde_alt = 0.0;  // log|I_d + F1^H H1^H N1^-1 H1 F1| + log|N1| - log|E3|
    double bar = 0.0;
    double gn = 0.0;         // log|I+..+..| - log|N1| + log|I+G2Q2G2^H| - log|E3|
    double gn_alt = 0.0;     // receive-side ratio form on both links
};

RawRates raw_rates(const ChannelSet &ch, const ComplexMatrix &F1, const ComplexMatrix &F2);

// [log|I + H1Q1H1^H (H2Q2H2^H+I)^-1| - log|I + G1Q1G1^H (G2Q2G2^H+I)^-1|]^+
double rate_gn(const ChannelSet &ch, const PrecoderPair &p);

RateBundle rate_ej(const ChannelSet &ch, const PrecoderPair &p);

// Builds the bundle from raw values (clamp, max-min, branch label)
RateBundle bundle_from_raw(const RawRates &r);

// log det(I + F1 S1 S1^H F1^H R_hs), S1 is Nb x T
double sensing_mi(const ComplexMatrix &F1, const ComplexMatrix &S1, const ComplexMatrix &R_hs);

// Weighted-MSE identity utilities for the model y = H F s + n with
// E[s s^H] = R and noise covariance N. Shapes: H p x q, F q x d, R d x d,
// N p x p, U p x d, W d x d.

// E(U, F) = (I - U^H H F) R (I - U^H H F)^H + U^H N U
ComplexMatrix wmse_error(const ComplexMatrix &H, const ComplexMatrix &F, const ComplexMatrix &R,
                         const ComplexMatrix &N, const ComplexMatrix &U);

// U* = (N + H F R F^H H^H)^-1 H F R
ComplexMatrix wmse_optimal_u(const ComplexMatrix &H, const ComplexMatrix &F, const ComplexMatrix &R,
                               const ComplexMatrix &N);

// E* = R (I + F^H H^H N^-1 H F R)^-1
ComplexMatrix wmse_optimal_e(const ComplexMatrix &H, const ComplexMatrix &F, const ComplexMatrix &R,
                               const ComplexMatrix &N);

// [log|W R| - Tr(W E(U, F)) + d] - log|I + H F R F^H H^H N^-1|
double wmse_gap(const ComplexMatrix &H, const ComplexMatrix &F, const ComplexMatrix &R,
                  const ComplexMatrix &N, const ComplexMatrix &W, const ComplexMatrix &U);

constexpr double kNatsToBits = 1.4426950408889634;

} // namespace risjam
