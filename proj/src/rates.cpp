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

#include "risjam/rates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace risjam
{

void PrecoderPair::check_feasible() const
{
    const double t1 = F1.squaredNorm();
    const double t2 = F2.squaredNorm();
    if (t1 > P1 * (1.0 + 1e-9) + 1e-300 || t2 > P2 * (1.0 + 1e-9) + 1e-300)
        throw std::domain_error("PrecoderPair: power budget exceeded");
}

std::string to_string(EjBranch b)
{
    switch (b)
    {
    case EjBranch::hat:
        return "hat";
    case EjBranch::tilde:
        return "tilde";
    case EjBranch::bar:
        return "bar";
    }
    return "?";
}

namespace
{
void check_dims(const ChannelSet &ch, const ComplexMatrix &F1, const ComplexMatrix &F2)
{
    if (F1.rows() != ch.H1.cols() || F1.rows() != ch.G1.cols())
        throw std::domain_error("rates: F1 rows do not match Nb");
    if (F2.rows() != ch.H2.cols() || F2.rows() != ch.G2.cols())
        throw std::domain_error("rates: F2 rows do not match Nc");
    require_finite(F1, "F1");
    require_finite(F2, "F2");
    require_finite(ch.H1, "H1");
    require_finite(ch.H2, "H2");
    require_finite(ch.G1, "G1");
    require_finite(ch.G2, "G2");
}

ComplexMatrix gram(const ComplexMatrix &H, const ComplexMatrix &F)
{
    ComplexMatrix HF = H * F;
    return HF * HF.adjoint();
}

double clamp0(double x)
{
    return x > 0.0 ? x : 0.0;
}
} // namespace

RawRates raw_rates(const ChannelSet &ch, const ComplexMatrix &F1, const ComplexMatrix &F2)
{
    check_dims(ch, F1, F2);
    const Index nu = ch.H1.rows();
    const Index ne = ch.G1.rows();
    const ComplexMatrix Iu = eye(nu), Ie = eye(ne);

    const ComplexMatrix S1u = gram(ch.H1, F1);
    const ComplexMatrix S2u = gram(ch.H2, F2);
    const ComplexMatrix S1e = gram(ch.G1, F1);
    const ComplexMatrix S2e = gram(ch.G2, F2);

    const ComplexMatrix N1 = Iu + S2u;
    const ComplexMatrix Ne2 = Ie + S2e;

    const double ld_a = logdet_hpd(Iu + S1u);
    const double ld_b = logdet_hpd(Iu + S1u + S2u);
    const double ld_n1 = logdet_hpd(N1);
    const double ld_e3 = logdet_hpd(Ie + S1e + S2e);
    const double ld_ge2 = logdet_hpd(Ne2);
    const double ld_ge1 = logdet_hpd(Ie + S1e);

    // d x d forms through |I + AB| = |I + BA|
    const ComplexMatrix H1F1 = ch.H1 * F1;
    const ComplexMatrix G1F1 = ch.G1 * F1;
    const Index d1 = F1.cols();
    const double ld_ratio_u = logdet_hpd(eye(d1) + H1F1.adjoint() * solve_hpd(N1, H1F1));
    const double ld_ratio_e = logdet_hpd(eye(d1) + G1F1.adjoint() * solve_hpd(Ne2, G1F1));

    RawRates r;
    r.hat = ld_a + ld_ge2 - ld_e3;
    r.tilde = ld_b - ld_e3;
    r.tilde_alt = ld_ratio_u + ld_n1 - ld_e3;
    r.bar = ld_a - ld_ge1;
    r.gn = ld_b - ld_n1 + ld_ge2 - ld_e3;
    r.gn_alt = ld_ratio_u - ld_ratio_e;
    return r;
}

RateBundle bundle_from_raw(const RawRates &r)
{
    RateBundle b;
    b.r_hat = clamp0(r.hat);
    b.r_tilde = clamp0(r.tilde);
    b.r_bar = clamp0(r.bar);
    b.r_gn = clamp0(r.gn_alt);
    const double lo = std::min(b.r_hat, b.r_tilde);
    b.r_ej = std::max(lo, b.r_bar);
    if (b.r_bar >= lo - 1e-9)
        b.branch = EjBranch::bar;
    else
        b.branch = b.r_hat <= b.r_tilde ? EjBranch::hat : EjBranch::tilde;
    return b;
}

double rate_gn(const ChannelSet &ch, const PrecoderPair &p)
{
    return clamp0(raw_rates(ch, p.F1, p.F2).gn_alt);
}

RateBundle rate_ej(const ChannelSet &ch, const PrecoderPair &p)
{
    return bundle_from_raw(raw_rates(ch, p.F1, p.F2));
}

double sensing_mi(const ComplexMatrix &F1, const ComplexMatrix &S1, const ComplexMatrix &R_hs)
{
    require_hermitian(R_hs, "sensing_mi: R_hs");
    if (F1.rows() != R_hs.rows() || F1.cols() != S1.rows())
        throw std::domain_error("sensing_mi: shape mismatch");
    require_finite(F1, "sensing_mi: F1");
    require_finite(S1, "sensing_mi: S1");
    // log|I_Nb + F S S^H F^H R| = log|I_T + S^H F^H R F S|
    const ComplexMatrix FS = F1 * S1;
    const ComplexMatrix K = FS.adjoint() * hermitian_part(R_hs) * FS;
    return clamp0(logdet_hpd(eye(K.rows()) + K));
}

ComplexMatrix wmse_error(const ComplexMatrix &H, const ComplexMatrix &F, const ComplexMatrix &R,
                         const ComplexMatrix &N, const ComplexMatrix &U)
{
    const ComplexMatrix A = eye(F.cols()) - U.adjoint() * H * F;
    return hermitian_part(A * R * A.adjoint() + U.adjoint() * N * U);
}

ComplexMatrix wmse_optimal_u(const ComplexMatrix &H, const ComplexMatrix &F, const ComplexMatrix &R,
                               const ComplexMatrix &N)
{
    const ComplexMatrix HF = H * F;
    return solve_hpd(N + HF * R * HF.adjoint(), HF * R);
}

ComplexMatrix wmse_optimal_e(const ComplexMatrix &H, const ComplexMatrix &F, const ComplexMatrix &R,
                               const ComplexMatrix &N)
{
    const ComplexMatrix HF = H * F;
    const ComplexMatrix K = HF.adjoint() * solve_hpd(N, HF);
    const ComplexMatrix M = eye(F.cols()) + K * R;
    return hermitian_part(R * M.inverse());
}

double wmse_gap(const ComplexMatrix &H, const ComplexMatrix &F, const ComplexMatrix &R,
                  const ComplexMatrix &N, const ComplexMatrix &W, const ComplexMatrix &U)
{
    require_hermitian(R, "wmse_gap: R");
    require_hermitian(N, "wmse_gap: N");
    require_hermitian(W, "wmse_gap: W");
    if (!is_hpd(R) || !is_hpd(N) || !is_hpd(W))
        throw std::domain_error("wmse_gap: R, N and W must be positive definite");
    const ComplexMatrix E = wmse_error(H, F, R, N, U);
    const double bound = logdet_hpd(W) + logdet_hpd(R) - trace_product(W, E) + double(F.cols());
    const ComplexMatrix HF = H * F;
    const double exact = logdet_hpd(N + HF * R * HF.adjoint()) - logdet_hpd(N);
    return bound - exact;
}

} // namespace risjam
