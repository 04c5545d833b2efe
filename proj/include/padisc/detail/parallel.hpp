#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace padisc::detail {

// Splits [0, total) into contiguous blocks, runs `work(begin, end)` for each
// block on up to `workers` threads and concatenates the per-block results in
// block order, so the output does not depend on the worker count.
template <typename T, typename Work>
std::vector<T> ordered_parallel_collect(std::uint64_t total, unsigned workers, Work work) {
    workers = std::max(1u, workers);
    if (workers == 1 || total < 2) {
        return work(std::uint64_t{0}, total);
    }
    const std::uint64_t blocks = std::min<std::uint64_t>(total, std::uint64_t{workers} * 8);
    std::vector<std::vector<T>> parts(blocks);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (std::uint64_t b = w; b < blocks; b += workers) {
                    const std::uint64_t begin = total * b / blocks;
                    const std::uint64_t end = total * (b + 1) / blocks;
                    parts[b] = work(begin, end);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    std::vector<T> merged;
    for (auto& part : parts) {
        merged.insert(merged.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return merged;
}

}  // namespace padisc::detail
