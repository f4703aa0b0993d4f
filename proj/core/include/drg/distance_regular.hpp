#ifndef DRG_DISTANCE_REGULAR_HPP
#define DRG_DISTANCE_REGULAR_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "drg/graph.hpp"
#include "drg/intersection.hpp"

namespace drg {

/// Why a graph was rejected, with a concrete witness so failures reproduce.
struct DrgRejection {
    enum class Kind { not_regular, not_distance_regular };
    Kind kind = Kind::not_regular;
    std::string reason;

    // not_regular: `vertex` has `found` neighbours where vertex 0 has `expected`.
    // not_distance_regular: the ordered pair (u, v) at distance `level` saw
    // `found` neighbours of u one step closer to v (constant 'c') or farther
    // from v (constant 'b') where an earlier pair saw `expected`.
    int vertex = -1;
    int u = -1;
    int v = -1;
    int level = -1;
    char constant = '?';
    std::int64_t expected = -1;
    std::int64_t found = -1;
};

struct DrgCheckResult {
    std::optional<IntersectionArray> array;
    std::optional<DrgRejection> rejection;

    bool accepted() const { return array.has_value(); }
};

/// Decides distance-regularity by brute force: checks global regularity,
/// then for every ordered pair (u,v) with d(u,v) = j counts the neighbours
/// of u at distance j-1 and j+1 from v and requires the counts to be
/// constants c_j and b_j across all pairs. On success the extracted array is
/// returned (it passes validate()); on failure the rejection carries the
/// first offending pair in (v, u) scan order, independent of parallelism.
/// Throws Disconnected for empty or disconnected input.
DrgCheckResult check_distance_regular(const Graph& g);

}  // namespace drg

#endif
