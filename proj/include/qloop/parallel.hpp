#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace qloop {

/// Runs f(i) for i in [0, count) across hardware threads. Results must be
/// written to pre-sized slots indexed by i, so the merged outcome is
/// deterministic regardless of scheduling. Exceptions are rethrown once.
template <class F>
void parallel_for(std::size_t count, F&& f) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    unsigned workers = static_cast<unsigned>(std::min<std::size_t>(hw, count));
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) f(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace qloop
