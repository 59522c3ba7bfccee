#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace hilie {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Runs fn(i) for i in [0, count) on `jobs` threads. Work items must be
// independent; callers merge results by index so output order never depends
// on scheduling.
template <class F>
void parallel_for(size_t count, int jobs, F&& fn) {
    jobs = resolve_jobs(jobs);
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> threads;
    size_t workers = std::min(static_cast<size_t>(jobs), count);
    threads.reserve(workers);
    for (size_t t = 0; t < workers; ++t) {
        threads.emplace_back([&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& th : threads) th.join();
}

} // namespace hilie
