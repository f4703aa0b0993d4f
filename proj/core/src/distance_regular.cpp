#include "drg/distance_regular.hpp"

#include <sstream>
#include <stdexcept>

#include "drg/oracle.hpp"
#include "sweep.hpp"

namespace drg {

namespace {

constexpr std::int64_t k_unset = -1;

// Scan state for one chunk of sources. Candidates are indexed by level;
// first_pair[level] records the (v, u) pair that set the candidate, so a
// cross-chunk conflict can name the exact pair that disagrees with an
// earlier chunk. A chunk stops at its first internal mismatch: pairs before
// it are fully recorded, which is all the ordered merge needs to reproduce
// the sequential witness.
struct LevelCandidates {
    std::vector<std::int64_t> value;
    std::vector<std::pair<int, int>> first_pair;

    void ensure(int level) {
        if (static_cast<int>(value.size()) <= level) {
            value.resize(level + 1, k_unset);
            first_pair.resize(level + 1, {-1, -1});
        }
    }
};

struct ChunkScan {
    LevelCandidates b;
    LevelCandidates c;
    std::optional<DrgRejection> mismatch;
};

DrgRejection pair_mismatch(int u, int v, int level, char constant,
                           std::int64_t expected, std::int64_t found) {
    DrgRejection r;
    r.kind = DrgRejection::Kind::not_distance_regular;
    r.u = u;
    r.v = v;
    r.level = level;
    r.constant = constant;
    r.expected = expected;
    r.found = found;
    std::ostringstream msg;
    msg << "not distance-regular: pair (u=" << u << ", v=" << v << ") at distance "
        << level << " has " << found << " neighbours of u "
        << (constant == 'c' ? "closer to" : "farther from") << " v, expected "
        << constant << "_" << level << " = " << expected;
    r.reason = msg.str();
    return r;
}

// Returns false and fills `mismatch` on the first inconsistent count.
bool check_or_set(LevelCandidates& cand, int level, std::int64_t count, int u, int v,
                  char constant, std::optional<DrgRejection>& mismatch) {
    cand.ensure(level);
    if (cand.value[level] == k_unset) {
        cand.value[level] = count;
        cand.first_pair[level] = {v, u};
        return true;
    }
    if (cand.value[level] != count) {
        mismatch = pair_mismatch(u, v, level, constant, cand.value[level], count);
        return false;
    }
    return true;
}

bool earlier_pair(const DrgRejection& a, const DrgRejection& b) {
    return std::pair(a.v, a.u) < std::pair(b.v, b.u);
}

// Merges `chunk` candidates into the running `merged` candidates. A level
// whose values disagree is a conflict at the chunk's first-setter pair;
// among several conflicting levels the earliest pair in (v, u) order wins,
// matching what a sequential scan would have flagged first.
void merge_candidates(LevelCandidates& merged, const LevelCandidates& chunk,
                      char constant, std::optional<DrgRejection>& mismatch) {
    merged.ensure(static_cast<int>(chunk.value.size()) - 1);
    for (std::size_t level = 0; level < chunk.value.size(); ++level) {
        if (chunk.value[level] == k_unset)
            continue;
        if (merged.value[level] == k_unset) {
            merged.value[level] = chunk.value[level];
            merged.first_pair[level] = chunk.first_pair[level];
        } else if (merged.value[level] != chunk.value[level]) {
            const auto [v, u] = chunk.first_pair[level];
            DrgRejection conflict = pair_mismatch(u, v, static_cast<int>(level), constant,
                                                  merged.value[level], chunk.value[level]);
            if (!mismatch || earlier_pair(conflict, *mismatch))
                mismatch = conflict;
        }
    }
}

}  // namespace

DrgCheckResult check_distance_regular(const Graph& g) {
    if (!is_connected(g))
        throw Disconnected("graph is empty or disconnected");
    const int n = g.vertex_count();

    const int degree = g.degree(0);
    for (int v = 1; v < n; ++v) {
        if (g.degree(v) != degree) {
            DrgRejection r;
            r.kind = DrgRejection::Kind::not_regular;
            r.vertex = v;
            r.expected = degree;
            r.found = g.degree(v);
            r.reason = "not regular: vertex " + std::to_string(v) + " has degree " +
                       std::to_string(g.degree(v)) + " but vertex 0 has degree " +
                       std::to_string(degree);
            return {std::nullopt, r};
        }
    }

    if (n == 1) {
        DrgRejection r;
        r.kind = DrgRejection::Kind::not_distance_regular;
        r.reason = "graph has diameter 0 (a single vertex); an intersection array "
                   "requires diameter >= 1";
        return {std::nullopt, r};
    }

    auto chunks = detail::chunked_source_sweep<ChunkScan>(
        n, [&g, n](int, int first, int last) {
            ChunkScan scan;
            detail::BfsScratch scratch(n);
            for (int src = first; src < last && !scan.mismatch; ++src) {
                int ecc = 0;
                detail::bfs_fill(g, src, scratch.dist.data(), scratch.queue.data(), &ecc);
                const std::uint16_t* dist = scratch.dist.data();
                for (int u = 0; u < n && !scan.mismatch; ++u) {
                    const int level = dist[u];
                    std::int64_t closer = 0, farther = 0;
                    for (std::int32_t w : g.neighbors(u)) {
                        closer += (dist[w] == level - 1);
                        farther += (dist[w] == level + 1);
                    }
                    if (!check_or_set(scan.b, level, farther, u, src, 'b', scan.mismatch))
                        break;
                    if (level >= 1)
                        check_or_set(scan.c, level, closer, u, src, 'c', scan.mismatch);
                }
                scratch.reset();
            }
            return scan;
        });

    LevelCandidates b_merged, c_merged;
    std::optional<DrgRejection> verdict;
    for (const ChunkScan& chunk : chunks) {
        std::optional<DrgRejection> conflict;
        merge_candidates(b_merged, chunk.b, 'b', conflict);
        std::optional<DrgRejection> c_conflict;
        merge_candidates(c_merged, chunk.c, 'c', c_conflict);
        if (c_conflict && (!conflict || earlier_pair(*c_conflict, *conflict)))
            conflict = c_conflict;
        if (chunk.mismatch && (!conflict || earlier_pair(*chunk.mismatch, *conflict)))
            conflict = chunk.mismatch;
        if (conflict) {
            verdict = conflict;
            break;
        }
    }
    if (verdict)
        return {std::nullopt, *verdict};

    const int diam = static_cast<int>(b_merged.value.size()) - 1;
    if (diam < 1 || b_merged.value[diam] != 0)
        throw std::logic_error("distance-regularity sweep produced an inconsistent top level");
    c_merged.ensure(diam);
    std::vector<std::int64_t> b(b_merged.value.begin(), b_merged.value.begin() + diam);
    std::vector<std::int64_t> c(c_merged.value.begin() + 1, c_merged.value.begin() + diam + 1);
    for (std::int64_t x : b)
        if (x == k_unset)
            throw std::logic_error("distance-regularity sweep left a level unset");
    for (std::int64_t x : c)
        if (x == k_unset)
            throw std::logic_error("distance-regularity sweep left a level unset");

    // A graph that passed the sweep always yields a validate()-clean array.
    return {validate(b, c), std::nullopt};
}

}  // namespace drg
