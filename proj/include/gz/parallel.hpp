#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace gz {

/// Worker count: min(GZ_THREADS, hardware concurrency), at least 1.
inline int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("GZ_THREADS")) {
        const int req = std::atoi(env);
        if (req >= 1 && req < hw) hw = req;
    }
    return hw;
}

/// Runs fn(i) for i in [0, count) on a bounded pool. Results must be written
/// to pre-sized slots indexed by i so ordering never depends on scheduling.
/// The first exception is rethrown on the calling thread.
inline void parallel_for_index(int count, const std::function<void(int)>& fn) {
    const int workers = std::min(worker_count(), std::max(1, count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace gz
