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

#include "doctest.h"
#include "oracles.hpp"
#include "risjam/channel.hpp"

#include <cmath>

using namespace risjam;

TEST_CASE("path loss")
{
    Topology t;
    CHECK(path_loss(1.0, 2.2, t) == doctest::Approx(1e-3).epsilon(1e-15));
    CHECK(path_loss(1.0, 0.0, t) == doctest::Approx(t.c0));
    CHECK(path_loss(10.0, 2.2, t) == doctest::Approx(6.30957344480193e-06).epsilon(1e-12));
    CHECK(path_loss(3.0, 2.5, t) > path_loss(4.0, 2.5, t));
    CHECK_THROWS_AS(path_loss(0.0, 2.2, t), std::domain_error);
    CHECK_THROWS_AS(path_loss(-1.0, 2.2, t), std::domain_error);

    double prev = path_loss(0.5, 3.5, t);
    for (double d = 0.6; d < 100.0; d *= 1.3)
    {
        double v = path_loss(d, 3.5, t);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("steering vector")
{
    ComplexVector a = steering_vector(4, 0.0);
    for (Index k = 0; k < 4; ++k)
        CHECK(std::abs(a(k) - cd(1.0, 0.0)) < 1e-15);
    CHECK(steering_vector(1, 0.7).size() == 1);
    CHECK(std::abs(steering_vector(1, 0.7)(0) - cd(1.0, 0.0)) < 1e-15);
    ComplexVector b = steering_vector(2, kPi / 2);
    CHECK(std::abs(b(1) - cd(-1.0, 0.0)) < 1e-15);
    ComplexVector c = steering_vector(16, 0.37);
    for (Index k = 0; k < 16; ++k)
        CHECK(std::abs(std::abs(c(k)) - 1.0) < 1e-15);
    CHECK_THROWS_AS(steering_vector(0, 0.0), std::domain_error);
}

TEST_CASE("rician sampling")
{
    ComplexMatrix los = steering_vector(3, 0.3) * steering_vector(2, -0.4).adjoint();
    ComplexMatrix a = sample_rician(3, 2, 1e12, los, 7);
    CHECK((a - los).norm() / los.norm() < 1e-5);

    ComplexMatrix x = sample_rician(3, 2, 3.0, los, 11);
    ComplexMatrix y = sample_rician(3, 2, 3.0, los, 11);
    CHECK((x - y).norm() == 0.0);

    // beta = 0: pure NLoS, unit variance per entry
    ComplexMatrix big = sample_rician(100, 100, 0.0, ComplexMatrix::Zero(100, 100), 5);
    double var = big.squaredNorm() / 1e4;
    CHECK(var == doctest::Approx(1.0).epsilon(0.05));

    CHECK_THROWS_AS(sample_rician(2, 2, 3.0, los, 1), std::domain_error);
}

TEST_CASE("compose effective channels")
{
    Dims d{2, 2, 2, 2, 3};
    RawChannels raw = build_iid_scenario(d, 3);
    Rng rng(9);
    PhaseVector phi = random_phases(3, rng);
    ChannelSet ch = compose_effective(raw, phi);
    auto rel = [](const ComplexMatrix &a, const ComplexMatrix &b) { return (a - b).norm() / b.norm(); };
    CHECK(rel(ch.H1, oracle::effective_by_sum(raw.H_bu, raw.H_ru, phi, raw.H_br)) < 1e-12);
    CHECK(rel(ch.H2, oracle::effective_by_sum(raw.G_cu, raw.G_ru, phi, raw.G_cr)) < 1e-12);
    CHECK(rel(ch.G1, oracle::effective_by_sum(raw.H_be, raw.H_re, phi, raw.H_br)) < 1e-12);
    CHECK(rel(ch.G2, oracle::effective_by_sum(raw.G_ce, raw.G_re, phi, raw.G_cr)) < 1e-12);

    // identity reflection with no direct link
    RawChannels r2 = raw;
    r2.H_bu.setZero();
    ChannelSet c2 = compose_effective(r2, PhaseVector::Ones(3));
    CHECK(rel(c2.H1, raw.H_ru * raw.H_br) < 1e-14);

    // M = 0
    RawChannels r0 = build_iid_scenario(Dims{2, 3, 1, 2, 0}, 4);
    ChannelSet c0 = compose_effective(r0, PhaseVector(0));
    CHECK((c0.H1 - r0.H_bu).norm() == 0.0);
    CHECK((c0.G2 - r0.G_ce).norm() == 0.0);

    CHECK_THROWS_AS(compose_effective(raw, PhaseVector::Ones(2)), std::domain_error);
    PhaseVector bad = PhaseVector::Ones(3);
    bad(1) = 1.1;
    CHECK_THROWS_AS(compose_effective(raw, bad), std::domain_error);
}

TEST_CASE("effective channel recomputation on 100 random pairs")
{
    for (int s = 0; s < 100; ++s)
    {
        Rng rng(derive_seed(100, std::uint64_t(s)));
        Dims d{1 + Index(rng.uniform() * 4), 1 + Index(rng.uniform() * 4), 1 + Index(rng.uniform() * 4),
               1 + Index(rng.uniform() * 4), Index(rng.uniform() * 9)};
        RawChannels raw = build_iid_scenario(d, std::uint64_t(s));
        PhaseVector phi = random_phases(d.m, rng);
        for (Index m = 0; m < d.m; ++m)
            CHECK(std::abs(std::abs(phi(m)) - 1.0) < 1e-12);
        ChannelSet ch = compose_effective(raw, phi);
        ComplexMatrix ref = oracle::effective_by_sum(raw.G_ce, raw.G_re, phi, raw.G_cr);
        CHECK((ch.G2 - ref).norm() <= 1e-12 * std::max(1.0, ref.norm()));
        ComplexMatrix ref1 = oracle::effective_by_sum(raw.H_bu, raw.H_ru, phi, raw.H_br);
        CHECK((ch.H1 - ref1).norm() <= 1e-12 * std::max(1.0, ref1.norm()));
    }
}

TEST_CASE("scenario geometry and normalization")
{
    Topology t;
    CHECK(distance(t.bs, t.ris) == doctest::Approx(std::sqrt(50.0 * 50.0 + 5.0 * 5.0)));
    CHECK(normalized_snr(20.0, -100.0) == doctest::Approx(1e12).epsilon(1e-12));
    CHECK(dbm_to_watts(30.0) == doctest::Approx(1.0));

    Dims d{2, 4, 2, 2, 8};
    RawChannels a = build_scenario(t, d, -100.0, 42);
    RawChannels b = build_scenario(t, d, -100.0, 42);
    CHECK(channel_hash(a) == channel_hash(b));
    CHECK((a.H_br - b.H_br).norm() == 0.0);
    RawChannels c = build_scenario(t, d, -100.0, 43);
    CHECK(channel_hash(a) != channel_hash(c));
    a.validate();

    // mean entry power: PL on the BS-RIS hop, PL/sigma^2 on the RIS-UE hop (|LoS| = 1 entries)
    double pl = path_loss(distance(t.bs, t.ris), t.exp_to_ris, t);
    double pl2 = path_loss(distance(t.ris, t.ue), t.exp_from_ris, t);
    double sigma2 = dbm_to_watts(-100.0);
    double acc = 0.0, acc2 = 0.0;
    int n = 200;
    for (int s = 0; s < n; ++s)
    {
        RawChannels r = build_scenario(t, d, -100.0, std::uint64_t(1000 + s));
        acc += r.H_br.squaredNorm() / double(r.H_br.size());
        acc2 += r.H_ru.squaredNorm() / double(r.H_ru.size());
    }
    CHECK(acc / n == doctest::Approx(pl).epsilon(0.05));
    CHECK(acc2 / n == doctest::Approx(pl2 / sigma2).epsilon(0.05));

    // the cascade scales like 1/sigma: lowering the noise by 10 dB scales H1 by sqrt(10)
    RawChannels lo = build_scenario(t, d, -110.0, 42);
    RawChannels hi = build_scenario(t, d, -100.0, 42);
    PhaseVector ones = PhaseVector::Ones(d.m);
    CHECK((compose_effective(lo, ones).H1 - std::sqrt(10.0) * compose_effective(hi, ones).H1).norm() <=
          1e-9 * compose_effective(lo, ones).H1.norm());

    Topology bad = t;
    bad.ue = bad.eve;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    Topology bad2 = t;
    bad2.c0 = 0.0;
    CHECK_THROWS_AS(bad2.validate(), std::domain_error);
}

TEST_CASE("generator stream is fixed")
{
    // the standard's conformance value: 10000th output for the default seed
    Rng rng(5489);
    std::uint64_t x = 0;
    for (int i = 0; i < 10000; ++i)
        x = rng.next_u64();
    CHECK(x == 9981545732273789042ULL);
    Rng a(5), b(5);
    for (int i = 0; i < 10; ++i)
        CHECK(a.complex_normal() == b.complex_normal());
}
