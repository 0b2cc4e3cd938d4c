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

#include "risjam/asymptotics.hpp"
#include "risjam/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace risjam
{

void AsymptoticScenario::validate() const
{
    if (m < 1 || nu < 1 || trials < 1)
        throw std::domain_error("AsymptoticScenario: need M >= 1, Nu >= 1, trials >= 1");
}

PhaseVector align_phases(const ComplexVector &h_row, const ComplexVector &g)
{
    if (h_row.size() != g.size())
        throw std::domain_error("align_phases: length mismatch");
    PhaseVector phi(g.size());
    for (Index i = 0; i < g.size(); ++i)
    {
        const cd p = h_row(i) * g(i);
        phi(i) = std::abs(p) > 0.0 ? std::polar(1.0, -std::arg(p)) : cd(1.0, 0.0);
    }
    return phi;
}

namespace
{
struct TrialOut
{
    bool dominated;
    double aligned;
    double g2;
};

TrialOut run_trial(Index m, Index nu, std::uint64_t seed)
{
    Rng rng(seed);
    const ComplexMatrix H = complex_gaussian(nu, m, rng);
    const ComplexMatrix G = complex_gaussian(nu, m, rng);
    const ComplexVector g = complex_gaussian(m, 1, rng);
    const PhaseVector phi = align_phases(H.row(0).transpose(), g);
    const ComplexVector pg = phi.cwiseProduct(g);
    const ComplexVector h2 = H * pg;
    const ComplexVector g2 = G * pg;
    return {g2.squaredNorm() <= h2.squaredNorm(), h2(0).real(), g2.squaredNorm()};
}
} // namespace

DominanceEstimate estimate_dominance(const AsymptoticScenario &sc, int workers)
{
    sc.validate();
    std::vector<TrialOut> out(static_cast<std::size_t>(sc.trials));
    parallel_for(out.size(), workers,
                 [&](std::size_t t) { out[t] = run_trial(sc.m, sc.nu, derive_seed(sc.seed, t)); });

    DominanceEstimate e;
    e.m = sc.m;
    e.nu = sc.nu;
    e.trials = sc.trials;
    double s = 0.0, s2 = 0.0, g = 0.0;
    for (const TrialOut &o : out)
    {
        e.dominated += o.dominated ? 1 : 0;
        s += o.aligned;
        s2 += o.aligned * o.aligned;
        g += o.g2;
    }
    const double n = double(sc.trials);
    e.p_hat = double(e.dominated) / n;
    e.p_se = std::sqrt(e.p_hat * (1.0 - e.p_hat) / n);
    e.aligned_mean = s / n;
    const double var = sc.trials > 1 ? std::max(0.0, (s2 - n * e.aligned_mean * e.aligned_mean) / (n - 1.0)) : 0.0;
    e.aligned_se = std::sqrt(var / n);
    e.g2_mean = g / n;
    return e;
}

std::vector<DominanceEstimate> dominance_sweep(const std::vector<Index> &m_list, Index nu, long trials,
                                               std::uint64_t seed, int workers)
{
    std::vector<DominanceEstimate> out;
    for (Index m : m_list)
        out.push_back(estimate_dominance(AsymptoticScenario{m, nu, trials, seed}, workers));
    return out;
}

} // namespace risjam
