#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace triclose {

inline unsigned default_thread_count() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

// Static chunking with deterministic in-order merge: results are identical
// for any worker count as long as `chunk_fn` is a pure function of its range.
template <typename T, typename ChunkFn, typename MergeFn>
T parallel_chunked(std::size_t n, unsigned threads, T init,
                   ChunkFn chunk_fn, MergeFn merge_fn) {
    if (threads == 0) threads = 1;
    const std::size_t chunks = std::min<std::size_t>(threads, n == 0 ? 1 : n);
    if (chunks <= 1) {
        T part = chunk_fn(std::size_t{0}, n);
        merge_fn(init, part);
        return init;
    }
    std::vector<T> parts(chunks);
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    const std::size_t step = (n + chunks - 1) / chunks;
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t lo = c * step;
        const std::size_t hi = std::min(n, lo + step);
        workers.emplace_back([&, c, lo, hi] { parts[c] = chunk_fn(lo, hi); });
    }
    for (auto& w : workers) w.join();
    for (auto& p : parts) merge_fn(init, p);
    return init;
}

inline std::uint64_t parallel_sum(std::size_t n, unsigned threads,
                                  const std::function<std::uint64_t(std::size_t, std::size_t)>& fn) {
    return parallel_chunked<std::uint64_t>(
        n, threads, 0, fn, [](std::uint64_t& acc, std::uint64_t part) { acc += part; });
}

} // namespace triclose
