#include "drg/oracle.hpp"

#include <stdexcept>

#include "sweep.hpp"

namespace drg {

std::vector<std::uint16_t> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.vertex_count())
        throw BadInput("BFS source " + std::to_string(source) + " out of range");
    detail::BfsScratch scratch(g.vertex_count());
    int ecc = 0;
    detail::bfs_fill(g, source, scratch.dist.data(), scratch.queue.data(), &ecc);
    return std::move(scratch.dist);
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0)
        return false;
    detail::BfsScratch scratch(n);
    int ecc = 0;
    return detail::bfs_fill(g, 0, scratch.dist.data(), scratch.queue.data(), &ecc) == n;
}

DistanceDistribution distance_distribution(const Graph& g) {
    if (!is_connected(g))
        throw Disconnected("graph is empty or disconnected");
    const int n = g.vertex_count();

    // Connectivity is established above, so every sweep reaches all n
    // vertices and no marker values appear below.
    struct ChunkCounts {
        std::vector<std::uint64_t> ordered;  // ordered pairs by distance
    };
    auto results = detail::chunked_source_sweep<ChunkCounts>(
        n, [&g, n](int, int first, int last) {
            ChunkCounts out;
            detail::BfsScratch scratch(n);
            for (int src = first; src < last; ++src) {
                int ecc = 0;
                detail::bfs_fill(g, src, scratch.dist.data(), scratch.queue.data(), &ecc);
                if (static_cast<int>(out.ordered.size()) < ecc + 1)
                    out.ordered.resize(ecc + 1, 0);
                for (int v = 0; v < n; ++v)
                    ++out.ordered[scratch.dist[v]];
                scratch.reset();
            }
            return out;
        });

    std::vector<std::uint64_t> ordered(1, 0);
    for (const ChunkCounts& chunk : results) {
        if (ordered.size() < chunk.ordered.size())
            ordered.resize(chunk.ordered.size(), 0);
        for (std::size_t k = 0; k < chunk.ordered.size(); ++k)
            ordered[k] += chunk.ordered[k];
    }

    DistanceDistribution dist;
    dist.n = n;
    dist.diameter = static_cast<int>(ordered.size()) - 1;
    dist.counts.assign(ordered.size(), 0);
    for (std::size_t k = 1; k < ordered.size(); ++k) {
        if (ordered[k] % 2 != 0)
            throw std::logic_error("ordered pair count at distance " + std::to_string(k) +
                                   " is odd; adjacency symmetry is corrupted");
        dist.counts[k] = ordered[k] / 2;
    }
    return dist;
}

IntPolynomial hosoya_polynomial(const DistanceDistribution& d) {
    std::vector<BigInt> coeffs(d.counts.size());
    for (std::size_t k = 0; k < d.counts.size(); ++k)
        coeffs[k] = d.counts[k];
    return IntPolynomial::from_coeffs(std::move(coeffs));
}

BigInt wiener_index(const DistanceDistribution& d) {
    BigInt w = 0;
    for (std::size_t k = 1; k < d.counts.size(); ++k)
        w += BigInt(k) * d.counts[k];
    return w;
}

BigInt hyper_wiener_index(const DistanceDistribution& d) {
    BigInt ww = 0;
    for (std::size_t k = 1; k < d.counts.size(); ++k)
        ww += BigInt(d.counts[k]) * (BigInt(k) * (k + 1) / 2);
    return ww;
}

IntPolynomial hosoya_oracle(const Graph& g) {
    return hosoya_polynomial(distance_distribution(g));
}

BigInt wiener_oracle(const Graph& g) {
    return wiener_index(distance_distribution(g));
}

BigInt hyper_wiener_oracle(const Graph& g) {
    return hyper_wiener_index(distance_distribution(g));
}

}  // namespace drg
