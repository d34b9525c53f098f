/**
 * @file parallel.hpp
 * @brief Order-preserving parallel map over an index range.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace picard {

inline constexpr const char* kThreadsEnvVar = "PICARD_THREADS";

/// PICARD_THREADS when set to a positive integer, else the hardware concurrency.
inline unsigned default_thread_count() {
    if (const char* env = std::getenv(kThreadsEnvVar)) {
        try {
            const long value = std::stol(env);
            if (value > 0) return static_cast<unsigned>(value);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Computes f(0) .. f(n-1) on up to `threads` workers; result i is f(i).
/// The first exception thrown by any task is rethrown after all workers join.
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, unsigned threads, F&& f) {
    std::vector<std::optional<R>> slots(n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                slots[i].emplace(f(i));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(n);
            }
        }
    };

    const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (count == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<R> out;
    out.reserve(n);
    for (auto& slot : slots) out.push_back(std::move(*slot));
    return out;
}

}  // namespace picard
