#pragma once

#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

namespace scspread::detail {

// Splits [begin, end) into contiguous chunks, runs `work` on each chunk
// (possibly on worker threads), and folds the partial results in chunk
// order. The result is independent of the thread count whenever `combine`
// is associative over ordered chunks, which holds for the integer sums and
// min-reductions used in this project.
template <class T, class Work, class Combine>
T chunked_reduce(std::int64_t begin, std::int64_t end, int threads, T init, Work&& work,
                 Combine&& combine) {
    const std::int64_t count = end - begin;
    if (count <= 0) return init;
    int workers = threads < 1 ? 1 : threads;
    if (static_cast<std::int64_t>(workers) > count) workers = static_cast<int>(count);
    if (workers == 1) return combine(std::move(init), work(begin, end));

    std::vector<T> parts(static_cast<std::size_t>(workers), init);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const std::int64_t step = count / workers;
    const std::int64_t extra = count % workers;
    std::int64_t lo = begin;
    for (int w = 0; w < workers; ++w) {
        const std::int64_t hi = lo + step + (w < extra ? 1 : 0);
        pool.emplace_back([&parts, &work, w, lo, hi] { parts[static_cast<std::size_t>(w)] = work(lo, hi); });
        lo = hi;
    }
    for (auto& t : pool) t.join();

    T acc = std::move(init);
    for (auto& part : parts) acc = combine(std::move(acc), std::move(part));
    return acc;
}

}  // namespace scspread::detail
