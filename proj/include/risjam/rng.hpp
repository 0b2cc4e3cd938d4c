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

#include <cstdint>
#include <random>

namespace risjam
{

// Seeded generator: std::mt19937_64 (fully specified by the C++ standard) with
// 53-bit uniforms and Box-Muller normals, so streams do not depend on the
// standard library's distribution implementations.
class Rng
{
  public:
    static constexpr const char *kAlgorithm = "mt19937_64+box-muller";

    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform on [0, 1)
    double uniform();

    // Standard normal N(0, 1)
    double normal();

    // Circularly symmetric CN(0, 1)
    cd complex_normal();

    // Uniform phase e^{j theta}, theta ~ U[0, 2 pi)
    cd unit_phase();

  private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// splitmix64 finalizer applied to (base, stream); used to derive independent seeds
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

// rows x cols matrix of i.i.d. CN(0, 1) entries
ComplexMatrix complex_gaussian(Index rows, Index cols, Rng &rng);

} // namespace risjam
