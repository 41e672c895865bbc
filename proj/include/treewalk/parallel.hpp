#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace treewalk {

/// Worker count to use for `requested` (0 = hardware concurrency).
inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// fn(items[i]) for every i, computed on up to `workers` threads. Results
/// come back in input order, so output never depends on scheduling. The
/// first exception thrown by any call is rethrown after all workers stop.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F fn, int workers = 0)
    -> std::vector<std::invoke_result_t<F&, const T&>> {
    using R = std::invoke_result_t<F&, const T&>;
    std::vector<std::optional<R>> slots(items.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto work = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            try {
                slots[i].emplace(fn(items[i]));
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = items.size();
                return;
            }
        }
    };

    int n = std::min<int>(resolve_workers(workers), static_cast<int>(std::max<std::size_t>(items.size(), 1)));
    if (n <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n);
        for (int t = 0; t < n; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    std::vector<R> out;
    out.reserve(items.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace treewalk
