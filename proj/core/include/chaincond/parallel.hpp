#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace chaincond {

/// Worker cap: CHAINCOND_THREADS when set, else hardware concurrency.
inline int worker_cap() {
    if (const char* env = std::getenv("CHAINCOND_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for i in [0, count) across at most worker_cap() threads.
/// Callers slot results by index, so output stays deterministic.
inline void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
    const int workers = std::min<int>(worker_cap(), static_cast<int>(count));
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

} // namespace chaincond
