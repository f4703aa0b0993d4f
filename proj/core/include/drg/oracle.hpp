#ifndef DRG_ORACLE_HPP
#define DRG_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "drg/graph.hpp"
#include "drg/polynomial.hpp"

namespace drg {

// Marker for vertices a BFS did not reach: the maximum value of the compact
// distance type. Distances themselves are capped below it.
inline constexpr std::uint16_t k_unreached = 0xFFFF;

/// Single-source BFS distances; unreachable vertices hold k_unreached.
std::vector<std::uint16_t> bfs_distances(const Graph& g, int source);

/// True iff one BFS from vertex 0 reaches all n >= 1 vertices.
bool is_connected(const Graph& g);

/// Counts d(G,k) of unordered vertex pairs at each distance k, with
/// counts[0] = 0 and counts.size() = diameter + 1.
struct DistanceDistribution {
    std::int64_t n = 0;
    int diameter = 0;
    std::vector<std::uint64_t> counts;
};

/// Brute-force all-pairs BFS: one pass per source, ordered-pair totals
/// halved (evenness asserted, which catches adjacency-symmetry corruption).
/// Sources are swept concurrently; the reduction is a fixed-order integer
/// sum, so results are identical across runs and thread counts.
/// Throws Disconnected when some pair has no path.
DistanceDistribution distance_distribution(const Graph& g);

// Folds of a distribution into the three invariants.
IntPolynomial hosoya_polynomial(const DistanceDistribution& d);
BigInt wiener_index(const DistanceDistribution& d);
BigInt hyper_wiener_index(const DistanceDistribution& d);

/// Ground-truth H(G,t): coefficient d(G,k) at t^k.
IntPolynomial hosoya_oracle(const Graph& g);
/// Ground-truth W(G) = sum over unordered pairs of d(u,v).
BigInt wiener_oracle(const Graph& g);
/// Ground-truth WW(G) = (1/2) sum over unordered pairs of (d + d^2).
BigInt hyper_wiener_oracle(const Graph& g);

}  // namespace drg

#endif
