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

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace risjam
{

// Calls fn(i) for i in [0, n) on up to `workers` threads. Indices are handed
// out dynamically; callers write results into slot i so output order is fixed.
// The first exception thrown by fn is rethrown after all threads join.
template <class Fn> void parallel_for(std::size_t n, int workers, Fn &&fn)
{
    const std::size_t w = std::min<std::size_t>(n, std::size_t(std::max(1, workers)));
    if (w <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    auto body = [&] {
        for (std::size_t i = next++; i < n; i = next++)
        {
            try
            {
                fn(i);
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(mu);
                if (!err)
                    err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < w; ++k)
        pool.emplace_back(body);
    for (std::thread &t : pool)
        t.join();
    if (err)
        std::rethrow_exception(err);
}

} // namespace risjam
