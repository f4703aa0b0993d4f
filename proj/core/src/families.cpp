#include "drg/families.hpp"

#include <algorithm>
#include <span>
#include <utility>

#include "drg/polynomial.hpp"

namespace drg {

namespace {

using Edges = std::vector<std::pair<int, int>>;

// Saturating Pascal triangle restricted to C(m, j) for j <= k. Any entry
// whose true value stays below the saturation point is exact; rank sums only
// ever touch entries bounded by the (capped) combination count, so saturated
// entries never reach a rank computation.
class CombinationIndexer {
public:
    CombinationIndexer(int n, int k) : n_(n), k_(k), choose_((n + 1) * (k + 1), 0) {
        for (int m = 0; m <= n; ++m) {
            at(m, 0) = 1;
            for (int j = 1; j <= std::min(m, k); ++j) {
                const std::uint64_t sum = at(m - 1, j - 1) + at(m - 1, j);
                at(m, j) = std::min<std::uint64_t>(sum, k_saturated);
            }
        }
    }

    std::uint64_t count() const { return at(n_, k_); }

    // Lexicographic rank of a sorted k-subset of {0..n-1}.
    std::int64_t rank(std::span<const int> subset) const {
        std::int64_t r = 0;
        int prev = -1;
        for (int i = 0; i < k_; ++i) {
            for (int x = prev + 1; x < subset[i]; ++x)
                r += static_cast<std::int64_t>(at(n_ - 1 - x, k_ - 1 - i));
            prev = subset[i];
        }
        return r;
    }

private:
    static constexpr std::uint64_t k_saturated = std::uint64_t(1) << 62;

    std::uint64_t& at(int m, int j) { return choose_[m * (k_ + 1) + j]; }
    const std::uint64_t& at(int m, int j) const { return choose_[m * (k_ + 1) + j]; }

    int n_, k_;
    std::vector<std::uint64_t> choose_;
};

// Advances a sorted k-subset of {0..n-1} to its lexicographic successor.
bool next_combination(std::vector<int>& subset, int n) {
    const int k = static_cast<int>(subset.size());
    for (int i = k - 1; i >= 0; --i) {
        if (subset[i] < n - k + i) {
            ++subset[i];
            for (int j = i + 1; j < k; ++j)
                subset[j] = subset[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> first_combination(int k) {
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i)
        subset[i] = i;
    return subset;
}

void check_caps(const BigInt& vertices, const BigInt& edges, std::int64_t max_vertices,
                const std::string& what) {
    if (max_vertices < 1)
        throw BadParams("vertex cap must be at least 1");
    if (vertices > max_vertices)
        throw SizeLimit(what + " would have " + vertices.str() + " vertices, above the cap of " +
                        std::to_string(max_vertices));
    const BigInt max_edges = BigInt(max_vertices) * 100;
    if (edges > max_edges)
        throw SizeLimit(what + " would have " + edges.str() + " edges, above the guard of " +
                        max_edges.str());
}

BigInt big_binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

// Kneser graph K(n,k): k-subsets of {0..n-1} in lexicographic order, edge
// iff disjoint. Callers guarantee n >= 2k+1 (connected) and k >= 1.
Graph kneser(int n, int k, std::int64_t max_vertices, const std::string& what) {
    const BigInt vertices = big_binomial(n, k);
    const BigInt degree = big_binomial(n - k, k);
    check_caps(vertices, vertices * degree / 2, max_vertices, what);
    const int count = static_cast<int>(vertices);

    CombinationIndexer indexer(n, k);
    Edges edges;
    std::vector<int> subset = first_combination(k);
    std::vector<char> in_subset(n, 0);
    std::vector<int> complement(n - k);
    std::vector<int> neighbor(k);
    for (int s = 0; s < count; ++s) {
        std::fill(in_subset.begin(), in_subset.end(), 0);
        for (int x : subset)
            in_subset[x] = 1;
        int idx = 0;
        for (int x = 0; x < n; ++x)
            if (!in_subset[x])
                complement[idx++] = x;

        std::vector<int> pick = first_combination(k);
        do {
            for (int i = 0; i < k; ++i)
                neighbor[i] = complement[pick[i]];
            const std::int64_t t = indexer.rank(neighbor);
            if (t > s)
                edges.emplace_back(s, static_cast<int>(t));
        } while (next_combination(pick, n - k));

        next_combination(subset, n);
    }
    return Graph::from_edges(count, std::move(edges));
}

void expect_arity(const FamilySpec& spec, std::size_t arity) {
    if (spec.params.size() != arity)
        throw BadParams(std::string(family_name(spec.family)) + " takes " +
                        std::to_string(arity) + " parameter(s), got " +
                        std::to_string(spec.params.size()));
}

// Arity and range rules shared by FamilySpec construction and the
// generators themselves.
void check_spec(const FamilySpec& spec) {
    const auto& p = spec.params;
    switch (spec.family) {
        case Family::complete:
            expect_arity(spec, 1);
            if (p[0] < 2)
                throw BadParams("complete graph needs n >= 2, got " + std::to_string(p[0]));
            break;
        case Family::cycle:
            expect_arity(spec, 1);
            if (p[0] < 3)
                throw BadParams("cycle needs n >= 3, got " + std::to_string(p[0]));
            break;
        case Family::complete_bipartite:
            expect_arity(spec, 1);
            if (p[0] < 2)
                throw BadParams("bipartite needs part size m >= 2, got " +
                                std::to_string(p[0]));
            break;
        case Family::hypercube:
            expect_arity(spec, 1);
            if (p[0] < 1)
                throw BadParams("hypercube needs k >= 1, got " + std::to_string(p[0]));
            break;
        case Family::petersen:
            expect_arity(spec, 0);
            break;
        case Family::kneser2:
            expect_arity(spec, 1);
            if (p[0] < 5)
                throw BadParams("kneser2 needs n >= 5 (K(4,2) is a disconnected perfect "
                                "matching), got " + std::to_string(p[0]));
            break;
        case Family::hamming:
            expect_arity(spec, 2);
            if (p[0] < 1 || p[1] < 2)
                throw BadParams("hamming needs d >= 1 and q >= 2, got d = " +
                                std::to_string(p[0]) + ", q = " + std::to_string(p[1]));
            break;
        case Family::johnson:
            expect_arity(spec, 2);
            if (p[1] < 1 || p[0] <= p[1])
                throw BadParams("johnson needs n > k >= 1, got n = " + std::to_string(p[0]) +
                                ", k = " + std::to_string(p[1]));
            break;
        case Family::odd:
            expect_arity(spec, 1);
            if (p[0] < 2)
                throw BadParams("odd graph needs k >= 2, got " + std::to_string(p[0]));
            break;
    }
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::cycle: return "cycle";
        case Family::complete_bipartite: return "bipartite";
        case Family::hypercube: return "hypercube";
        case Family::petersen: return "petersen";
        case Family::kneser2: return "kneser2";
        case Family::hamming: return "hamming";
        case Family::johnson: return "johnson";
        case Family::odd: return "odd";
    }
    return "?";
}

FamilySpec FamilySpec::parse(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    FamilySpec spec;
    bool found = false;
    for (Family f : {Family::complete, Family::cycle, Family::complete_bipartite,
                     Family::hypercube, Family::petersen, Family::kneser2, Family::hamming,
                     Family::johnson, Family::odd}) {
        if (family_name(f) == name) {
            spec.family = f;
            found = true;
            break;
        }
    }
    if (!found)
        throw BadParams("unknown family \"" + std::string(name) +
                        "\"; expected one of complete, cycle, bipartite, hypercube, "
                        "petersen, kneser2, hamming, johnson, odd");

    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        if (rest.empty())
            throw BadParams("empty parameter list in \"" + std::string(text) + "\"");
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const std::string piece(rest.substr(0, comma));
            try {
                std::size_t used = 0;
                spec.params.push_back(std::stoll(piece, &used));
                if (used != piece.size())
                    throw std::invalid_argument(piece);
            } catch (const std::exception&) {
                throw BadParams("bad family parameter \"" + piece + "\" in \"" +
                                std::string(text) + "\"");
            }
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
    }

    check_spec(spec);
    return spec;
}

std::string FamilySpec::to_string() const {
    std::string out(family_name(family));
    for (std::size_t i = 0; i < params.size(); ++i) {
        out += (i == 0) ? ':' : ',';
        out += std::to_string(params[i]);
    }
    return out;
}

Graph complete(std::int64_t n, std::int64_t max_vertices) {
    check_spec({Family::complete, {n}});
    check_caps(n, BigInt(n) * (n - 1) / 2, max_vertices, "complete:" + std::to_string(n));
    Edges edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

Graph cycle(std::int64_t n, std::int64_t max_vertices) {
    check_spec({Family::cycle, {n}});
    check_caps(n, n, max_vertices, "cycle:" + std::to_string(n));
    Edges edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, static_cast<int>((i + 1) % n));
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

Graph complete_bipartite(std::int64_t m, std::int64_t max_vertices) {
    check_spec({Family::complete_bipartite, {m}});
    check_caps(2 * m, BigInt(m) * m, max_vertices, "bipartite:" + std::to_string(m));
    Edges edges;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v)
            edges.emplace_back(u, static_cast<int>(m + v));
    return Graph::from_edges(static_cast<int>(2 * m), std::move(edges));
}

Graph hypercube(std::int64_t k, std::int64_t max_vertices) {
    check_spec({Family::hypercube, {k}});
    const BigInt vertices = BigInt(1) << k;
    check_caps(vertices, vertices * k / 2, max_vertices, "hypercube:" + std::to_string(k));
    const int count = static_cast<int>(vertices);
    Edges edges;
    for (int u = 0; u < count; ++u)
        for (int bit = 0; bit < k; ++bit) {
            const int v = u ^ (1 << bit);
            if (u < v)
                edges.emplace_back(u, v);
        }
    return Graph::from_edges(count, std::move(edges));
}

Graph kneser2(std::int64_t n, std::int64_t max_vertices) {
    check_spec({Family::kneser2, {n}});
    return kneser(static_cast<int>(n), 2, max_vertices, "kneser2:" + std::to_string(n));
}

Graph petersen() {
    return kneser2(5);
}

Graph hamming(std::int64_t d, std::int64_t q, std::int64_t max_vertices) {
    check_spec({Family::hamming, {d, q}});
    BigInt vertices = 1;
    for (std::int64_t i = 0; i < d; ++i)
        vertices *= q;
    const std::string what = "hamming:" + std::to_string(d) + "," + std::to_string(q);
    check_caps(vertices, vertices * d * (q - 1) / 2, max_vertices, what);
    const int count = static_cast<int>(vertices);

    // Vertex u encodes a length-d word with digit i at u / q^i mod q.
    Edges edges;
    for (int u = 0; u < count; ++u) {
        std::int64_t place = 1;
        for (int pos = 0; pos < d; ++pos) {
            const int digit = static_cast<int>(u / place % q);
            for (int other = 0; other < q; ++other) {
                if (other == digit)
                    continue;
                const int v = static_cast<int>(u + (other - digit) * place);
                if (u < v)
                    edges.emplace_back(u, v);
            }
            place *= q;
        }
    }
    return Graph::from_edges(count, std::move(edges));
}

Graph johnson(std::int64_t n, std::int64_t k, std::int64_t max_vertices) {
    check_spec({Family::johnson, {n, k}});
    const BigInt vertices = big_binomial(n, k);
    const std::string what = "johnson:" + std::to_string(n) + "," + std::to_string(k);
    check_caps(vertices, vertices * k * (n - k) / 2, max_vertices, what);
    const int count = static_cast<int>(vertices);
    const int nn = static_cast<int>(n), kk = static_cast<int>(k);

    CombinationIndexer indexer(nn, kk);
    Edges edges;
    std::vector<int> subset = first_combination(kk);
    std::vector<char> in_subset(nn, 0);
    std::vector<int> neighbor(kk);
    for (int s = 0; s < count; ++s) {
        std::fill(in_subset.begin(), in_subset.end(), 0);
        for (int x : subset)
            in_subset[x] = 1;
        for (int drop = 0; drop < kk; ++drop) {
            for (int add = 0; add < nn; ++add) {
                if (in_subset[add])
                    continue;
                int idx = 0;
                for (int i = 0; i < kk; ++i)
                    if (i != drop)
                        neighbor[idx++] = subset[i];
                neighbor[idx++] = add;
                std::sort(neighbor.begin(), neighbor.end());
                const std::int64_t t = indexer.rank(neighbor);
                if (t > s)
                    edges.emplace_back(s, static_cast<int>(t));
            }
        }
        next_combination(subset, nn);
    }
    return Graph::from_edges(count, std::move(edges));
}

Graph odd_graph(std::int64_t k, std::int64_t max_vertices) {
    check_spec({Family::odd, {k}});
    return kneser(static_cast<int>(2 * k - 1), static_cast<int>(k - 1), max_vertices,
                  "odd:" + std::to_string(k));
}

Graph build(const FamilySpec& spec, std::int64_t max_vertices) {
    const auto& p = spec.params;
    switch (spec.family) {
        case Family::complete: return complete(p[0], max_vertices);
        case Family::cycle: return cycle(p[0], max_vertices);
        case Family::complete_bipartite: return complete_bipartite(p[0], max_vertices);
        case Family::hypercube: return hypercube(p[0], max_vertices);
        case Family::petersen: return petersen();
        case Family::kneser2: return kneser2(p[0], max_vertices);
        case Family::hamming: return hamming(p[0], p[1], max_vertices);
        case Family::johnson: return johnson(p[0], p[1], max_vertices);
        case Family::odd: return odd_graph(p[0], max_vertices);
    }
    throw BadParams("unhandled family");
}

}  // namespace drg
