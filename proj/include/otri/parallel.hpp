#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace otri {

// <= 0 means "use available parallelism".
inline unsigned resolve_threads(int requested) {
    if (requested > 0) return static_cast<unsigned>(requested);
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs f(begin_c, end_c, chunk_index) over contiguous chunks of [begin, end).
// Chunk boundaries depend only on (begin, end, threads), and callers reduce
// per-chunk results in chunk order, so output is identical for any thread
// count.
template <typename F>
void parallel_chunks(std::uint32_t begin, std::uint32_t end, unsigned threads, F&& f) {
    const std::uint32_t total = end > begin ? end - begin : 0;
    if (total == 0) return;
    if (threads <= 1 || total == 1) {
        f(begin, end, 0u);
        return;
    }
    const unsigned nchunks = threads < total ? threads : total;
    std::vector<std::thread> pool;
    pool.reserve(nchunks);
    for (unsigned c = 0; c < nchunks; ++c) {
        const std::uint32_t lo = begin + static_cast<std::uint32_t>(
                                             (static_cast<std::uint64_t>(total) * c) / nchunks);
        const std::uint32_t hi = begin + static_cast<std::uint32_t>(
                                             (static_cast<std::uint64_t>(total) * (c + 1)) / nchunks);
        pool.emplace_back([&f, lo, hi, c] { f(lo, hi, c); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace otri
