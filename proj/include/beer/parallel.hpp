#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace beer {

// Runs fn(i) for i in [0, count) on up to `jobs` worker threads. Callers must
// write results into per-index slots; with that discipline the outcome is
// identical for every worker count.
template <typename Fn>
void parallel_for(std::size_t jobs, std::size_t count, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min(jobs, count);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace beer
