#ifndef DRG_GRAPH_HPP
#define DRG_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "drg/errors.hpp"

namespace drg {

/// Undirected simple graph on vertices 0..n-1 with contiguous (CSR)
/// adjacency; each neighbour list is sorted ascending. Immutable after
/// construction.
class Graph {
public:
    Graph() = default;

    // Builds from an undirected edge list. Endpoints must lie in [0, n);
    // self-loops are rejected; duplicate edges (in either orientation)
    // collapse to one.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return edge_count_; }

    std::span<const std::int32_t> neighbors(int v) const {
        return {adjacency_.data() + offsets_[v],
                adjacency_.data() + offsets_[v + 1]};
    }

    int degree(int v) const {
        return static_cast<int>(offsets_[v + 1] - offsets_[v]);
    }

private:
    int n_ = 0;
    std::int64_t edge_count_ = 0;
    std::vector<std::int64_t> offsets_;    // size n_ + 1
    std::vector<std::int32_t> adjacency_;  // size 2 * edge_count_
};

/// Reads the edge-list text format: one edge per line as two
/// whitespace-separated non-negative integers "u v"; blank lines and lines
/// starting with '#' are ignored. The vertex count is inferred as
/// 1 + max index unless declared. Throws BadInput on malformed lines,
/// self-loops, or indices outside a declared count.
Graph read_edge_list(std::istream& in, std::optional<int> declared_n = {});

}  // namespace drg

#endif
