// Internal helpers shared by the oracle and the distance-regularity checker:
// a reusable single-source BFS and a deterministic chunked parallel sweep
// over BFS sources. Not installed.
#ifndef DRG_SRC_SWEEP_HPP
#define DRG_SRC_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <cstring>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "drg/errors.hpp"
#include "drg/graph.hpp"
#include "drg/oracle.hpp"

namespace drg::detail {

// BFS from `source` into dist (all entries must be k_unreached on entry,
// size n) using `queue` (size n) as scratch. Returns the number of vertices
// reached; *ecc receives the eccentricity within the reached component.
inline int bfs_fill(const Graph& g, int source, std::uint16_t* dist,
                    std::int32_t* queue, int* ecc) {
    dist[source] = 0;
    queue[0] = source;
    int head = 0, tail = 1;
    std::uint16_t max_d = 0;
    while (head < tail) {
        const int u = queue[head++];
        const std::uint16_t du = dist[u];
        for (std::int32_t w : g.neighbors(u)) {
            if (dist[w] != k_unreached)
                continue;
            if (du + 1 >= k_unreached)
                throw SizeLimit("a graph distance exceeds the supported maximum " +
                                std::to_string(k_unreached - 1));
            dist[w] = static_cast<std::uint16_t>(du + 1);
            queue[tail++] = w;
        }
        max_d = du;
    }
    *ecc = max_d;
    return tail;
}

// Per-worker BFS scratch buffers, reset cheaply between sources.
struct BfsScratch {
    std::vector<std::uint16_t> dist;
    std::vector<std::int32_t> queue;

    explicit BfsScratch(int n) : dist(n), queue(n) { reset(); }
    void reset() {
        std::memset(dist.data(), 0xFF, dist.size() * sizeof(std::uint16_t));
    }
};

// Runs scan(chunk_index, first_source, last_source) for fixed contiguous
// chunks of the source range [0, n) and returns results indexed by chunk.
// Chunk boundaries depend only on n, and callers merge results in chunk
// order, so the outcome is independent of scheduling and thread count.
template <typename ChunkResult, typename Scan>
std::vector<ChunkResult> chunked_source_sweep(int n, Scan scan) {
    constexpr int chunk_size = 64;
    const int chunks = (n + chunk_size - 1) / chunk_size;
    std::vector<ChunkResult> results(chunks);

    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0)
        workers = 1;
    workers = std::min<unsigned>(workers, chunks);

    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        try {
            for (int idx = next.fetch_add(1); idx < chunks; idx = next.fetch_add(1)) {
                const int first = idx * chunk_size;
                const int last = std::min(n, first + chunk_size);
                results[idx] = scan(idx, first, last);
            }
        } catch (...) {
            std::scoped_lock lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
        }
    };

    if (workers <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i)
            pool.emplace_back(body);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    return results;
}

}  // namespace drg::detail

#endif
