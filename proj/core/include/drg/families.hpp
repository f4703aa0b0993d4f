#ifndef DRG_FAMILIES_HPP
#define DRG_FAMILIES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "drg/graph.hpp"

namespace drg {

// Default cap on generated vertex counts; generators refuse anything larger
// with SizeLimit. An edge guard of 100x the vertex cap is applied alongside
// it, since dense families explode in edges long before vertices.
inline constexpr std::int64_t k_default_vertex_cap = 50000;

enum class Family {
    complete,
    cycle,
    complete_bipartite,
    hypercube,
    petersen,
    kneser2,
    hamming,
    johnson,
    odd,
};

std::string_view family_name(Family f);

/// A named family instance, e.g. {hamming, {2, 3}}. parse() accepts the
/// CLI-facing form "name" or "name:p1,p2" ("hamming:2,3") and enforces
/// per-family arity and parameter ranges.
struct FamilySpec {
    Family family = Family::petersen;
    std::vector<std::int64_t> params;

    static FamilySpec parse(std::string_view text);
    std::string to_string() const;
};

// Generators. All are deterministic: identical parameters produce identical
// adjacency. Parameter-range violations throw BadParams; graphs beyond the
// cap throw SizeLimit.
Graph complete(std::int64_t n, std::int64_t max_vertices = k_default_vertex_cap);
Graph cycle(std::int64_t n, std::int64_t max_vertices = k_default_vertex_cap);
// K_{m,m}: parts {0..m-1} and {m..2m-1}.
Graph complete_bipartite(std::int64_t m, std::int64_t max_vertices = k_default_vertex_cap);
// Vertices 0..2^k-1, edge iff binary labels differ in exactly one bit.
Graph hypercube(std::int64_t k, std::int64_t max_vertices = k_default_vertex_cap);
// Vertices are the C(n,2) unordered pairs from {0..n-1} in lexicographic
// order, edge iff the pairs are disjoint.
Graph kneser2(std::int64_t n, std::int64_t max_vertices = k_default_vertex_cap);
// kneser2(5).
Graph petersen();
// Vertices are q-ary strings of length d, edge iff Hamming distance 1.
Graph hamming(std::int64_t d, std::int64_t q, std::int64_t max_vertices = k_default_vertex_cap);
// Vertices are k-subsets of {0..n-1} in lexicographic order, edge iff the
// subsets share k-1 elements.
Graph johnson(std::int64_t n, std::int64_t k, std::int64_t max_vertices = k_default_vertex_cap);
// Odd graph O_k = Kneser K(2k-1, k-1).
Graph odd_graph(std::int64_t k, std::int64_t max_vertices = k_default_vertex_cap);

Graph build(const FamilySpec& spec, std::int64_t max_vertices = k_default_vertex_cap);

}  // namespace drg

#endif
