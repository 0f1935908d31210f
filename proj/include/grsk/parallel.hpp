/*
   Copyright 2026 The grsk Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "grsk/rng.hpp"

namespace grsk {

/// Worker count used when a caller passes 0.
unsigned default_threads();
void set_default_threads(unsigned n);

/// Runs f(rng, i) for i in [0, n) with RngStream(seed, i) and returns the
/// results in index order, so the output does not depend on the worker count.
template <class F>
auto run_replicas(std::size_t n, std::uint64_t seed, F&& f, unsigned threads = 0) {
    using R = decltype(f(std::declval<RngStream&>(), std::size_t{}));
    std::vector<R> out(n);
    if (threads == 0) threads = default_threads();
    threads = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(threads, n)));
    auto work = [&](std::size_t i) {
        RngStream rng(seed, i);
        out[i] = f(rng, i);
    };
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i) work(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex m;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            constexpr std::size_t chunk = 256;
            for (;;) {
                const std::size_t lo = next.fetch_add(chunk);
                if (lo >= n) return;
                try {
                    for (std::size_t i = lo; i < std::min(n, lo + chunk); ++i) work(i);
                } catch (...) {
                    std::lock_guard<std::mutex> g(m);
                    if (!err) err = std::current_exception();
                    next = n;
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace grsk
