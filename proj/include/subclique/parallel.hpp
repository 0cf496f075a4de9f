#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace subclique {

// Worker count: SUBCLIQUE_THREADS caps it, 0/unset means all hardware
// threads.
inline uint32_t worker_count(uint64_t jobs) {
    uint32_t hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("SUBCLIQUE_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap > 0 && static_cast<uint32_t>(cap) < hw)
            hw = static_cast<uint32_t>(cap);
    }
    if (jobs < hw) hw = static_cast<uint32_t>(jobs);
    return std::max(1u, hw);
}

// Runs fn(index) for index in [0, jobs) on a small pool. Results must be
// written by fn into index-addressed storage; completion order is
// unspecified but every job runs exactly once.
inline void parallel_for_index(uint64_t jobs, const std::function<void(uint64_t)>& fn) {
    const uint32_t workers = worker_count(jobs);
    if (workers <= 1) {
        for (uint64_t i = 0; i < jobs; ++i) fn(i);
        return;
    }
    std::atomic<uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    for (uint32_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const uint64_t i = next.fetch_add(1);
                if (i >= jobs || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failed.load()) std::rethrow_exception(error);
}

}  // namespace subclique
