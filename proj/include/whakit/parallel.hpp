/*
 * Copyright 2026 The whakit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef WHAKIT_PARALLEL_HPP
#define WHAKIT_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace whakit {
namespace config {

inline std::atomic<unsigned>& thread_count_atomic() {
    static std::atomic<unsigned> n{[] {
        if (const char* env = std::getenv("WHAKIT_THREADS")) {
            long v = std::strtol(env, nullptr, 10);
            if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
        }
        return 1u;
    }()};
    return n;
}

inline unsigned thread_count() { return thread_count_atomic().load(); }
inline void set_thread_count(unsigned n) { thread_count_atomic().store(n ? n : 1); }

}  // namespace config

/**
 * @brief Run fn(i) for i in [0,n).  Work is split into deterministic
 * contiguous chunks, so any per-chunk accumulation merges in index order and
 * results do not depend on the thread count.
 */
template <class Fn>
void parallel_for(size_t n, Fn&& fn) {
    unsigned nt = config::thread_count();
    if (nt <= 1 || n < 2 * nt) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    std::exception_ptr err;
    std::mutex err_mu;
    size_t chunk = (n + nt - 1) / nt;
    for (unsigned t = 0; t < nt; ++t) {
        size_t lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&, lo, hi] {
            try {
                for (size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> g(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace whakit

#endif
