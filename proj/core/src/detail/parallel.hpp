#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace reduxwords::detail {

// Splits [0, count) into contiguous chunks, one per hardware thread, and
// runs body(begin, end) on each. Results must be written to disjoint slots,
// which keeps the output independent of scheduling.
template <class Body>
void parallel_chunks(std::size_t count, std::size_t min_chunk, Body&& body) {
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min(hw, std::max<std::size_t>(1, count / min_chunk));
    if (workers <= 1) {
        body(std::size_t{0}, count);
        return;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t step = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * step;
        const std::size_t end = std::min(count, begin + step);
        threads.emplace_back([&, w, begin, end] {
            try {
                if (begin < end) body(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace reduxwords::detail
