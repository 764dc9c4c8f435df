#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace cesaro::detail {

/// Runs f(0..n-1). Each index owns its output slot, so results do not depend
/// on scheduling. The exception of the lowest failing index is rethrown.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    const unsigned hw = std::thread::hardware_concurrency();
    if (hw <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::jthread> pool;
    const std::size_t count = std::min<std::size_t>(hw, n);
    for (std::size_t k = 0; k < count; ++k) pool.emplace_back(worker);
    pool.clear();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace cesaro::detail
