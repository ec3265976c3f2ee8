// Copyright 2026 The Fraqtal Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// @file
/// Index-parallel execution over pure per-item work. Results land in
/// per-index slots, so output never depends on the schedule.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace fraqtal {

/// Resolves the worker count: an explicit request wins, then the
/// FRAQTAL_THREADS environment variable, then hardware concurrency.
/// 0 means "auto" at every level.
inline int worker_count(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("FRAQTAL_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

struct IndexedFailure {
    std::size_t index = 0;
    std::string message;
};

/**
 * Runs fn(i) for i in [0, count) on `workers` threads. fn must be pure
 * per-index work. On exceptions, the lowest failing index and its message
 * are reported via the returned vector (execution continues so the caller
 * sees every failure).
 */
inline std::vector<IndexedFailure> parallel_for_indexed(
    std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
    std::vector<IndexedFailure> failures;
    if (count == 0) return failures;

    const int n_threads = std::max(1, std::min<int>(workers, static_cast<int>(count)));
    if (n_threads == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            try {
                fn(i);
            } catch (const std::exception& e) {
                failures.push_back({i, e.what()});
            }
        }
        return failures;
    }

    std::atomic<std::size_t> next{0};
    std::mutex failures_mutex;
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failures_mutex);
                failures.push_back({i, e.what()});
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    std::sort(failures.begin(), failures.end(),
              [](const IndexedFailure& a, const IndexedFailure& b) {
                  return a.index < b.index;
              });
    return failures;
}

}  // namespace fraqtal
