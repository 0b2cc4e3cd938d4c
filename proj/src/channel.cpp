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

#include "risjam/channel.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>
#include <string>

namespace risjam
{

double distance(const Point2 &a, const Point2 &b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

void Topology::validate() const
{
    if (exp_to_ris < 0.0 || exp_from_ris < 0.0 || exp_direct < 0.0)
        throw std::domain_error("Topology: negative path-loss exponent");
    if (!(c0 > 0.0) || !(d0 > 0.0))
        throw std::domain_error("Topology: C0 and d0 must be positive");
    if (!(rician >= 0.0))
        throw std::domain_error("Topology: Rician factor must be non-negative");
    const Point2 *nodes[] = {&bs, &jammer, &ris, &ue, &eve};
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (!(distance(*nodes[i], *nodes[j]) > 0.0))
                throw std::domain_error("Topology: coincident nodes");
}

void Dims::validate() const
{
    if (nb < 1 || nc < 1 || nu < 1 || ne < 1 || m < 0)
        throw std::domain_error("Dims: antenna counts must be >= 1 and M >= 0");
}

RawChannels RawChannels::zeros(const Dims &d)
{
    d.validate();
    RawChannels r;
    r.dims = d;
    r.H_br = ComplexMatrix::Zero(d.m, d.nb);
    r.H_bu = ComplexMatrix::Zero(d.nu, d.nb);
    r.H_be = ComplexMatrix::Zero(d.ne, d.nb);
    r.G_cr = ComplexMatrix::Zero(d.m, d.nc);
    r.G_cu = ComplexMatrix::Zero(d.nu, d.nc);
    r.G_ce = ComplexMatrix::Zero(d.ne, d.nc);
    r.H_ru = ComplexMatrix::Zero(d.nu, d.m);
    r.H_re = ComplexMatrix::Zero(d.ne, d.m);
    r.G_ru = ComplexMatrix::Zero(d.nu, d.m);
    r.G_re = ComplexMatrix::Zero(d.ne, d.m);
    return r;
}

namespace
{
void check_shape(const ComplexMatrix &A, Index r, Index c, const char *name)
{
    if (A.rows() != r || A.cols() != c)
        throw std::domain_error(std::string("RawChannels: ") + name + " has shape " +
                                std::to_string(A.rows()) + "x" + std::to_string(A.cols()) +
                                ", expected " + std::to_string(r) + "x" + std::to_string(c));
    require_finite(A, name);
}
} // namespace

void RawChannels::validate() const
{
    dims.validate();
    const Dims &d = dims;
    check_shape(H_br, d.m, d.nb, "H_br");
    check_shape(H_bu, d.nu, d.nb, "H_bu");
    check_shape(H_be, d.ne, d.nb, "H_be");
    check_shape(G_cr, d.m, d.nc, "G_cr");
    check_shape(G_cu, d.nu, d.nc, "G_cu");
    check_shape(G_ce, d.ne, d.nc, "G_ce");
    check_shape(H_ru, d.nu, d.m, "H_ru");
    check_shape(H_re, d.ne, d.m, "H_re");
    check_shape(G_ru, d.nu, d.m, "G_ru");
    check_shape(G_re, d.ne, d.m, "G_re");
}

void validate_phases(const PhaseVector &phi, Index m)
{
    if (phi.size() != m)
        throw std::domain_error("phase vector length " + std::to_string(phi.size()) +
                                " does not match M = " + std::to_string(m));
    for (Index i = 0; i < m; ++i)
        if (!(std::abs(std::abs(phi(i)) - 1.0) <= 1e-12))
            throw std::domain_error("phase vector entry is not unit modulus");
}

PhaseVector random_phases(Index m, Rng &rng)
{
    PhaseVector phi(m);
    for (Index i = 0; i < m; ++i)
        phi(i) = rng.unit_phase();
    return phi;
}

ComplexMatrix reflect(const ComplexMatrix &D, const ComplexMatrix &L, const PhaseVector &phi,
                      const ComplexMatrix &R)
{
    if (phi.size() == 0)
        return D;
    return D + L * phi.asDiagonal() * R;
}

ChannelSet compose_effective(const RawChannels &raw, const PhaseVector &phi)
{
    raw.validate();
    validate_phases(phi, raw.dims.m);
    ChannelSet ch;
    ch.raw = raw;
    ch.phi = phi;
    ch.H1 = reflect(raw.H_bu, raw.H_ru, phi, raw.H_br);
    ch.H2 = reflect(raw.G_cu, raw.G_ru, phi, raw.G_cr);
    ch.G1 = reflect(raw.H_be, raw.H_re, phi, raw.H_br);
    ch.G2 = reflect(raw.G_ce, raw.G_re, phi, raw.G_cr);
    return ch;
}

double path_loss(double d, double exponent, const Topology &topo)
{
    if (!(d > 0.0))
        throw std::domain_error("path_loss: distance must be positive");
    return topo.c0 * std::pow(d / topo.d0, -exponent);
}

ComplexVector steering_vector(Index n, double angle)
{
    if (n < 1)
        throw std::domain_error("steering_vector: n must be >= 1");
    ComplexVector a(n);
    const double s = std::sin(angle);
    for (Index k = 0; k < n; ++k)
        a(k) = std::polar(1.0, kPi * double(k) * s);
    return a;
}

ComplexMatrix sample_rician(Index rows, Index cols, double beta, const ComplexMatrix &los,
                            std::uint64_t seed)
{
    if (los.rows() != rows || los.cols() != cols)
        throw std::domain_error("sample_rician: LoS shape mismatch");
    if (!(beta >= 0.0))
        throw std::domain_error("sample_rician: beta must be non-negative");
    Rng rng(seed);
    ComplexMatrix nlos = complex_gaussian(rows, cols, rng);
    return std::sqrt(beta / (1.0 + beta)) * los + std::sqrt(1.0 / (1.0 + beta)) * nlos;
}

ComplexMatrix los_matrix(Index n_rx, Index n_tx, const Point2 &tx, const Point2 &rx)
{
    if (!(distance(tx, rx) > 0.0))
        throw std::domain_error("los_matrix: coincident nodes");
    const double phi_t = std::atan2(rx.y - tx.y, rx.x - tx.x);
    const double phi_r = kPi - phi_t;
    return steering_vector(n_rx, phi_r) * steering_vector(n_tx, phi_t).adjoint();
}

double dbm_to_watts(double dbm)
{
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double normalized_snr(double power_dbm, double noise_dbm)
{
    return dbm_to_watts(power_dbm) / dbm_to_watts(noise_dbm);
}

namespace
{
enum Block : std::uint64_t
{
    kHbr = 0,
    kHbu,
    kHbe,
    kGcr,
    kGcu,
    kGce,
    kHru,
    kHre,
    kGru,
    kGre
};

ComplexMatrix rician_link(Index n_rx, Index n_tx, const Point2 &tx, const Point2 &rx, double exponent,
                          const Topology &topo, double inv_sigma, std::uint64_t seed)
{
    if (n_rx == 0 || n_tx == 0)
        return ComplexMatrix::Zero(n_rx, n_tx);
    ComplexMatrix los = los_matrix(n_rx, n_tx, tx, rx);
    double gain = std::sqrt(path_loss(distance(tx, rx), exponent, topo)) * inv_sigma;
    return gain * sample_rician(n_rx, n_tx, topo.rician, los, seed);
}

ComplexMatrix rayleigh_link(Index n_rx, Index n_tx, const Point2 &tx, const Point2 &rx, double exponent,
                            const Topology &topo, double inv_sigma, std::uint64_t seed)
{
    Rng rng(seed);
    double gain = std::sqrt(path_loss(distance(tx, rx), exponent, topo)) * inv_sigma;
    return gain * complex_gaussian(n_rx, n_tx, rng);
}
} // namespace

RawChannels build_scenario(const Topology &topo, const Dims &dims, double noise_dbm,
                           std::uint64_t seed)
{
    topo.validate();
    dims.validate();
    const double inv_sigma = 1.0 / std::sqrt(dbm_to_watts(noise_dbm));
    const Dims &d = dims;
    RawChannels r;
    r.dims = d;
    auto s = [&](Block b) { return derive_seed(seed, b); };
    // 1/sigma sits on the receive-side blocks so each cascade carries it once
    r.H_br = rician_link(d.m, d.nb, topo.bs, topo.ris, topo.exp_to_ris, topo, 1.0, s(kHbr));
    r.G_cr = rician_link(d.m, d.nc, topo.jammer, topo.ris, topo.exp_to_ris, topo, 1.0, s(kGcr));
    r.H_ru = rician_link(d.nu, d.m, topo.ris, topo.ue, topo.exp_from_ris, topo, inv_sigma, s(kHru));
    r.H_re = rician_link(d.ne, d.m, topo.ris, topo.eve, topo.exp_from_ris, topo, inv_sigma, s(kHre));
    r.G_ru = rician_link(d.nu, d.m, topo.ris, topo.ue, topo.exp_from_ris, topo, inv_sigma, s(kGru));
    r.G_re = rician_link(d.ne, d.m, topo.ris, topo.eve, topo.exp_from_ris, topo, inv_sigma, s(kGre));
    r.H_bu = rayleigh_link(d.nu, d.nb, topo.bs, topo.ue, topo.exp_direct, topo, inv_sigma, s(kHbu));
    r.H_be = rayleigh_link(d.ne, d.nb, topo.bs, topo.eve, topo.exp_direct, topo, inv_sigma, s(kHbe));
    r.G_cu = rayleigh_link(d.nu, d.nc, topo.jammer, topo.ue, topo.exp_direct, topo, inv_sigma, s(kGcu));
    r.G_ce = rayleigh_link(d.ne, d.nc, topo.jammer, topo.eve, topo.exp_direct, topo, inv_sigma, s(kGce));
    return r;
}

RawChannels build_iid_scenario(const Dims &dims, std::uint64_t seed)
{
    dims.validate();
    const Dims &d = dims;
    RawChannels r;
    r.dims = d;
    auto g = [&](Index rows, Index cols, Block b) {
        Rng rng(derive_seed(seed, b));
        return complex_gaussian(rows, cols, rng);
    };
    r.H_br = g(d.m, d.nb, kHbr);
    r.H_bu = g(d.nu, d.nb, kHbu);
    r.H_be = g(d.ne, d.nb, kHbe);
    r.G_cr = g(d.m, d.nc, kGcr);
    r.G_cu = g(d.nu, d.nc, kGcu);
    r.G_ce = g(d.ne, d.nc, kGce);
    r.H_ru = g(d.nu, d.m, kHru);
    r.H_re = g(d.ne, d.m, kHre);
    r.G_ru = g(d.nu, d.m, kGru);
    r.G_re = g(d.ne, d.m, kGre);
    return r;
}

namespace
{
void fnv_bytes(std::uint64_t &h, const void *data, std::size_t n)
{
    const auto *p = static_cast<const unsigned char *>(data);
    for (std::size_t i = 0; i < n; ++i)
    {
        h ^= p[i];
        h *= 0x100000001B3ULL;
    }
}

void fnv_matrix(std::uint64_t &h, const ComplexMatrix &A)
{
    std::int64_t shape[2] = {A.rows(), A.cols()};
    fnv_bytes(h, shape, sizeof(shape));
    fnv_bytes(h, A.data(), sizeof(cd) * std::size_t(A.size()));
}
} // namespace

std::uint64_t channel_hash(const RawChannels &raw)
{
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (const ComplexMatrix *A : {&raw.H_br, &raw.H_bu, &raw.H_be, &raw.G_cr, &raw.G_cu, &raw.G_ce,
                                   &raw.H_ru, &raw.H_re, &raw.G_ru, &raw.G_re})
        fnv_matrix(h, *A);
    return h;
}

} // namespace risjam
