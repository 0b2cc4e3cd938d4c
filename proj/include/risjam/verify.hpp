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

#include <cstdint>
#include <string>
#include <vector>

namespace risjam
{

struct CheckResult
{
    std::string name;
    bool passed = false;
    std::string detail; // worst observed value and the threshold
    double seconds = 0.0;
};

// Each check draws its instances from `seed` and reports the worst case found.
CheckResult check_wmse_identity(int instances, std::uint64_t seed);
CheckResult check_form_equivalence(int instances, std::uint64_t seed);
CheckResult check_monotone_ascent(int runs, std::uint64_t seed);
CheckResult check_mm_descent(long steps, std::uint64_t seed);
CheckResult check_bisection(int solves, std::uint64_t seed);
CheckResult check_simo_dominance(int instances, std::uint64_t seed);
CheckResult check_sylvester(int instances, std::uint64_t seed);
CheckResult check_phase_alignment(int trials, std::uint64_t seed);
CheckResult check_build_determinism(std::uint64_t seed);

// All of the above at the given instance-count scale (1 = full counts)
std::vector<CheckResult> run_invariant_suite(double scale = 1.0, std::uint64_t seed = 2026);

} // namespace risjam
