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

#include <cstdint>
#include <vector>

namespace risjam
{

// Cascaded jammer links h2 = H diag(phi) g and g2 = G diag(phi) g with
// H, G (Nu x M) and g (M) i.i.d. CN(0,1).
struct AsymptoticScenario
{
    Index m = 1;
    Index nu = 1;
    long trials = 1000;
    std::uint64_t seed = 0;

    void validate() const;
};

// phi_i = exp(-j arg(h(i) g(i))) so every h(i) g(i) phi_i is real and >= 0.
// Zero products get phi_i = 1.
PhaseVector align_phases(const ComplexVector &h_row, const ComplexVector &g);

struct DominanceEstimate
{
    Index m = 0;
    Index nu = 0;
    long trials = 0;
    long dominated = 0;     // trials with |g2|^2 <= |h2|^2
    double p_hat = 0.0;
    double p_se = 0.0;      // binomial standard error
    double aligned_mean = 0.0; // mean of the first aligned output h2(0)
    double aligned_se = 0.0;
    double g2_mean = 0.0;   // mean |g2|^2
};

// Trial t draws from derive_seed(seed, t), so sweeps over M share seeds.
DominanceEstimate estimate_dominance(const AsymptoticScenario &sc, int workers = 1);

std::vector<DominanceEstimate> dominance_sweep(const std::vector<Index> &m_list, Index nu, long trials,
                                               std::uint64_t seed, int workers = 1);

} // namespace risjam
