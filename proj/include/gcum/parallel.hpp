#pragma once

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace gcum::par {

/// Worker cap: GCUM_THREADS if set (clamped to >= 1), else hardware
/// concurrency.
inline int thread_budget() {
    if (const char* env = std::getenv("GCUM_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return static_cast<int>(v);
        return 1;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

constexpr size_t kChunk = 256;

/// Deterministic chunked map: splits [0, n) into fixed 256-wide chunks,
/// workers claim chunks dynamically, and the partial result of chunk c is
/// stored at slot c. The caller reduces the returned partials in slot
/// order, so the outcome is independent of worker count and scheduling.
/// fn(begin, end) must depend only on the index range it receives.
template <typename Partial, typename ChunkFn>
std::vector<Partial> chunked_partials(size_t n, ChunkFn fn, int max_workers = 0) {
    size_t nchunks = (n + kChunk - 1) / kChunk;
    std::vector<Partial> partials(nchunks);
    if (nchunks == 0) return partials;
    int budget = max_workers > 0 ? max_workers : thread_budget();
    size_t workers = std::min<size_t>(static_cast<size_t>(budget), nchunks);
    if (workers <= 1) {
        for (size_t c = 0; c < nchunks; ++c)
            partials[c] = fn(c * kChunk, std::min(n, (c + 1) * kChunk));
        return partials;
    }
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (;;) {
            size_t c = next.fetch_add(1);
            if (c >= nchunks) break;
            partials[c] = fn(c * kChunk, std::min(n, (c + 1) * kChunk));
        }
    };
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    return partials;
}

}  // namespace gcum::par
