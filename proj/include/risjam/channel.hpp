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
#include "risjam/rng.hpp"

#include <cstdint>

namespace risjam
{

struct Point2
{
    double x = 0.0;
    double y = 0.0;
};

double distance(const Point2 &a, const Point2 &b);

// Scenario geometry and large-scale fading parameters
struct Topology
{
    Point2 bs{0.0, 10.0};
    Point2 jammer{0.0, 5.0};
    Point2 ris{50.0, 5.0};
    Point2 ue{49.0, 0.0};
    Point2 eve{60.0, 0.0};

    double exp_to_ris = 2.2;   // BS -> RIS and jammer -> RIS
    double exp_from_ris = 2.5; // RIS -> UE and RIS -> Eve
    double exp_direct = 3.5;   // BS/jammer -> UE/Eve

    double c0 = 1e-3;   // gain at the reference distance (linear)
    double d0 = 1.0;    // reference distance (m)
    double rician = 3.0; // Rician factor (linear)

    // Throws std::domain_error on invalid parameters or coincident nodes
    void validate() const;
};

struct Dims
{
    Index nb = 1; // BS antennas
    Index nc = 1; // jammer antennas
    Index nu = 1; // UE antennas
    Index ne = 1; // Eve antennas
    Index m = 0;  // RIS elements (0 = no RIS)

    void validate() const;
};

// The ten channel blocks. Naming: H_* originate at the BS, G_* at the jammer;
// suffix r/u/e denotes RIS, UE, Eve.
struct RawChannels
{
    Dims dims;
    ComplexMatrix H_br; // M x Nb
    ComplexMatrix H_bu; // Nu x Nb
    ComplexMatrix H_be; // Ne x Nb
    ComplexMatrix G_cr; // M x Nc
    ComplexMatrix G_cu; // Nu x Nc
    ComplexMatrix G_ce; // Ne x Nc
    ComplexMatrix H_ru; // Nu x M
    ComplexMatrix H_re; // Ne x M
    ComplexMatrix G_ru; // Nu x M
    ComplexMatrix G_re; // Ne x M

    // Empty blocks of the right shapes
    static RawChannels zeros(const Dims &d);

    // Throws std::domain_error when a block does not match dims
    void validate() const;
};

// Diagonal of the reflection matrix; unit modulus entries
using PhaseVector = ComplexVector;

// Throws std::domain_error on length mismatch or |phi_m| != 1 beyond 1e-12
void validate_phases(const PhaseVector &phi, Index m);

// Uniform i.i.d. phases
PhaseVector random_phases(Index m, Rng &rng);

// Raw channels plus RIS-composed effective channels
struct ChannelSet
{
    RawChannels raw;
    PhaseVector phi;
    ComplexMatrix H1; // BS -> UE
    ComplexMatrix H2; // jammer -> UE
    ComplexMatrix G1; // BS -> Eve
    ComplexMatrix G2; // jammer -> Eve
};

// D + L diag(phi) R
ComplexMatrix reflect(const ComplexMatrix &D, const ComplexMatrix &L, const PhaseVector &phi,
                      const ComplexMatrix &R);

ChannelSet compose_effective(const RawChannels &raw, const PhaseVector &phi);

// PL(d) = C0 (d / d0)^-exponent
double path_loss(double d, double exponent, const Topology &topo);

// Element k: exp(j pi k sin(angle)), k = 0..n-1
ComplexVector steering_vector(Index n, double angle);

// sqrt(beta/(1+beta)) los + sqrt(1/(1+beta)) NLoS, NLoS i.i.d. CN(0,1) from seed
ComplexMatrix sample_rician(Index rows, Index cols, double beta, const ComplexMatrix &los,
                            std::uint64_t seed);

// Line-of-sight matrix a_r(phi_r) a_t(phi_t)^H for a link tx -> rx
ComplexMatrix los_matrix(Index n_rx, Index n_tx, const Point2 &tx, const Point2 &rx);

double dbm_to_watts(double dbm);

// P / sigma^2 (the effective SNR scale)
double normalized_snr(double power_dbm, double noise_dbm);

// Samples the ten blocks for the given geometry and scales each by sqrt(PL).
// Blocks ending at the UE or Eve are also divided by the noise standard
// deviation (BS/jammer -> RIS blocks are not), so every effective channel
// carries 1/sigma exactly once, receivers see unit noise and budgets are in watts.
RawChannels build_scenario(const Topology &topo, const Dims &dims, double noise_dbm,
                           std::uint64_t seed);

// All blocks i.i.d. CN(0,1) without path loss (normalized noise scenarios)
RawChannels build_iid_scenario(const Dims &dims, std::uint64_t seed);

// FNV-1a over dims and all block entries
std::uint64_t channel_hash(const RawChannels &raw);

} // namespace risjam
