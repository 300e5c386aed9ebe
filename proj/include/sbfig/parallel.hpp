/**
 * sbfig - fixed-figure geometry on S_b-metric spaces
 *
 * Copyright (c) 2026
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 *
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <iterator>
#include <thread>
#include <vector>

namespace sbfig {

/// Splits [0, n) into at most `threads` contiguous chunks, runs `work(begin, end)`
/// on each, and returns the partial results in chunk order. Merging the partials
/// front to back reproduces the sequential result exactly.
template <typename Work>
auto parallel_chunks(std::size_t n, unsigned threads, Work&& work) {
    using Partial = decltype(work(std::size_t{0}, std::size_t{0}));
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
    std::vector<Partial> partials(workers);
    if (workers == 1) {
        partials[0] = work(std::size_t{0}, n);
        return partials;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = n * w / workers;
        const std::size_t end = n * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end] {
            try {
                partials[w] = work(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return partials;
}

/// Index-ordered concatenation of per-chunk vectors.
template <typename T>
std::vector<T> concat(std::vector<std::vector<T>> parts) {
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    std::vector<T> out;
    out.reserve(total);
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
    return out;
}

}  // namespace sbfig
