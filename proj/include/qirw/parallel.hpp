#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace qirw {

// Thread cap: QIRW_THREADS if set, else hardware concurrency.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("QIRW_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs fn(i) for i in [0, n). Each index is independent, so the result is
// identical to the sequential loop regardless of the thread count.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    unsigned threads = std::min<std::size_t>(thread_budget(), n);
    if (threads <= 1 || n < 32) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += threads) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace qirw
