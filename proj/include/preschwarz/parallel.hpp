#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace preschwarz {

/// Worker count from PRESCHWARZ_THREADS (a positive integer), defaulting to
/// the number of available cores. Throws ParameterError on a malformed value.
[[nodiscard]] std::size_t configured_thread_count();

/// Runs body(i) for i in [0, n) on up to `threads` workers with a static
/// contiguous partition. Each index is visited exactly once; bodies must only
/// write to per-index storage. If bodies throw, the exception from the lowest
/// failing index is rethrown after all workers join.
template <typename Body>
void parallel_for(std::size_t n, std::size_t threads, Body&& body)
{
    threads = std::max<std::size_t>(1, std::min(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        const std::size_t chunk = (n + threads - 1) / threads;
        for (std::size_t t = 0; t < threads; ++t) {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(n, begin + chunk);
            pool.emplace_back([&, t, begin, end] {
                for (std::size_t i = begin; i < end; ++i) {
                    try {
                        body(i);
                    } catch (...) {
                        errors[t] = std::current_exception();
                        return;
                    }
                }
            });
        }
    }
    // chunks are ordered, so the first failing chunk holds the lowest index
    for (std::size_t t = 0; t < threads; ++t) {
        if (errors[t]) {
            std::rethrow_exception(errors[t]);
        }
    }
}

} // namespace preschwarz
