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

#include "risjam/rng.hpp"

#include <cmath>

namespace risjam
{

double Rng::uniform()
{
    return double(eng_() >> 11) * 0x1.0p-53;
}

double Rng::normal()
{
    if (has_spare_)
    {
        has_spare_ = false;
        return spare_;
    }
    double u1 = 1.0 - uniform(); // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 2.0 * kPi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
}

cd Rng::complex_normal()
{
    static const double s = std::sqrt(0.5);
    double re = normal();
    double im = normal();
    return {s * re, s * im};
}

cd Rng::unit_phase()
{
    double t = 2.0 * kPi * uniform();
    return {std::cos(t), std::sin(t)};
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream)
{
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

ComplexMatrix complex_gaussian(Index rows, Index cols, Rng &rng)
{
    ComplexMatrix X(rows, cols);
    // column-major fill order is part of the reproducibility contract
    for (Index c = 0; c < cols; ++c)
        for (Index r = 0; r < rows; ++r)
            X(r, c) = rng.complex_normal();
    return X;
}

} // namespace risjam
