#include "drg/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>

namespace drg {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0)
        throw BadInput("vertex count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw BadInput("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                           ") has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw BadInput("self-loop at vertex " + std::to_string(u) +
                           " (graph must be simple)");
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n_ = n;
    g.edge_count_ = static_cast<std::int64_t>(edges.size());
    g.offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : edges) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (int v = 0; v < n; ++v)
        g.offsets_[v + 1] += g.offsets_[v];

    g.adjacency_.resize(2 * edges.size());
    std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    // Edges are sorted lexicographically, so each per-vertex list fills in
    // ascending neighbour order.
    for (const auto& [u, v] : edges) {
        g.adjacency_[cursor[u]++] = v;
        g.adjacency_[cursor[v]++] = u;
    }
    return g;
}

Graph read_edge_list(std::istream& in, std::optional<int> declared_n) {
    if (declared_n && *declared_n < 1)
        throw BadInput("declared vertex count must be at least 1");

    std::vector<std::pair<int, int>> edges;
    int max_index = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream fields(line);
        long long u = -1, v = -1;
        std::string extra;
        if (!(fields >> u >> v) || (fields >> extra))
            throw BadInput("line " + std::to_string(line_no) +
                           ": expected exactly two integers, got \"" + line + "\"");
        if (u < 0 || v < 0)
            throw BadInput("line " + std::to_string(line_no) +
                           ": vertex indices must be non-negative");
        if (u == v)
            throw BadInput("line " + std::to_string(line_no) + ": self-loop at vertex " +
                           std::to_string(u) + " (graph must be simple)");
        if (declared_n && (u >= *declared_n || v >= *declared_n))
            throw BadInput("line " + std::to_string(line_no) + ": vertex index " +
                           std::to_string(std::max(u, v)) + " exceeds declared count " +
                           std::to_string(*declared_n));
        constexpr long long index_limit = 1LL << 30;
        if (u >= index_limit || v >= index_limit)
            throw BadInput("line " + std::to_string(line_no) + ": vertex index " +
                           std::to_string(std::max(u, v)) + " is beyond the supported range");
        max_index = std::max(max_index, static_cast<int>(std::max(u, v)));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (in.bad())
        throw BadInput("I/O error while reading edge list");

    const int n = declared_n ? *declared_n : max_index + 1;
    if (n <= 0)
        throw BadInput("edge list is empty and no vertex count was declared");
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace drg
