#pragma once
#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace relay {

inline int default_threads() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs f(chunk_index, begin, end) over fixed-size chunks of [0, n). Chunk
// boundaries depend only on (n, chunks), never on the thread count, so any
// chunk-indexed reduction is deterministic.
template <typename F>
void parallel_chunks(std::int64_t n, int chunks, int threads, F&& f) {
    if (n <= 0) return;
    chunks = std::max(1, std::min<std::int64_t>(chunks, n));
    threads = std::max(1, threads);
    if (threads == 1) {
        for (int c = 0; c < chunks; ++c) {
            const std::int64_t b = n * c / chunks, e = n * (c + 1) / chunks;
            if (b < e) f(c, b, e);
        }
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int c = next.fetch_add(1);
            if (c >= chunks) return;
            const std::int64_t b = n * c / chunks, e = n * (c + 1) / chunks;
            if (b < e) f(c, b, e);
        }
    };
    const int nt = std::min(threads, chunks);
    pool.reserve(nt);
    for (int i = 0; i < nt; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace relay
