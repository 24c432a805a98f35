// Copyright 2026 The resdet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace resdet {

inline unsigned default_jobs()
{
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

/// out[i] = fn(items[i]) on up to `jobs` threads. Items are claimed from the
/// back, so callers that sort by increasing cost get the largest first.
/// The first exception thrown by any worker is rethrown.
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, Fn fn, unsigned jobs)
{
    using R = decltype(fn(items.front()));
    std::vector<R> out(items.size());
    if (items.empty()) return out;
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
    if (jobs == 1) {
        for (std::size_t i = items.size(); i-- > 0;) out[i] = fn(items[i]);
        return out;
    }

    std::atomic<std::size_t> remaining{items.size()};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t left = remaining.load();
            do {
                if (left == 0) return;
            } while (!remaining.compare_exchange_weak(left, left - 1));
            const std::size_t i = left - 1;
            try {
                out[i] = fn(items[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
    return out;
}

} // namespace resdet
