#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace orbitharm {

/// Worker cap from ORBIT_HARMONICS_THREADS; unset or invalid means 1
/// (single-threaded).
inline int env_thread_count() {
    const char* s = std::getenv("ORBIT_HARMONICS_THREADS");
    if (!s) return 1;
    int v = std::atoi(s);
    return v >= 1 ? v : 1;
}

/// Runs fn(i) for i in [0, count) on up to `workers` threads. Results must be
/// written by fn into pre-sized storage indexed by i, which keeps output
/// ordering independent of scheduling. The first exception is rethrown.
inline void parallel_for_index(size_t count, int workers, const std::function<void(size_t)>& fn) {
    if (count == 0) return;
    size_t nthreads = static_cast<size_t>(workers) < count ? static_cast<size_t>(workers) : count;
    if (nthreads <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (size_t t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
            while (!failed.load()) {
                size_t i = next.fetch_add(1);
                if (i >= count) break;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed.store(true);
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace orbitharm
