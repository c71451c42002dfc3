#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace hseq {

// Number of workers to use for a `jobs` request; 0 means "all hardware threads".
inline unsigned resolve_jobs(unsigned jobs) {
    if (jobs != 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Evaluates fn(i) for i in [0, count) on up to `jobs` threads.
///
/// Results are stored by index, so any reduction the caller performs over the
/// returned vector sees the same order regardless of scheduling or worker count.
/// The first exception thrown by a task is rethrown on the calling thread.
template <class Fn>
auto parallel_map(std::size_t count, unsigned jobs, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
    using Result = std::invoke_result_t<Fn&, std::size_t>;
    std::vector<Result> results(count);
    unsigned workers = std::min<std::size_t>(resolve_jobs(jobs), std::max<std::size_t>(count, 1));

    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count || failed.load(std::memory_order_relaxed)) return;
            try {
                results[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                failed = true;
            }
        }
    };

    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (error) std::rethrow_exception(error);
    return results;
}

}  // namespace hseq
