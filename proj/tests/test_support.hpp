// Test-only reference computations. Deliberately naive and independent of the
// library's search code: plain enumeration over subsets and permutations.
#ifndef HLNET_TEST_SUPPORT_HPP
#define HLNET_TEST_SUPPORT_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "hlnet/graph.hpp"

namespace hlnet::testing {

inline std::vector<std::uint64_t> masks_of(const Graph& g) {
    std::vector<std::uint64_t> adj(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (VertexId w : g.neighbors(v))
            adj[v] |= std::uint64_t{1} << w;
    return adj;
}

/// max |E(G[X])| over all |X| = k by visiting every subset of V (|V| <= 16).
inline std::int64_t brute_max_induced(const Graph& g, int k) {
    const auto adj = masks_of(g);
    const std::uint32_t count = static_cast<std::uint32_t>(g.vertex_count());
    std::int64_t best = -1;
    for (std::uint32_t s = 0; s < (1u << count); ++s) {
        if (std::popcount(s) != k)
            continue;
        std::int64_t twice = 0;
        for (std::uint32_t v = 0; v < count; ++v)
            if ((s >> v) & 1)
                twice += std::popcount(adj[v] & s);
        best = std::max(best, twice / 2);
    }
    return best;
}

/// Smallest adjacency bit string over all relabelings (|V| <= 8).
inline std::uint64_t brute_canonical_form(const Graph& g) {
    const auto adj = masks_of(g);
    const std::size_t n = adj.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = UINT64_MAX;
    do {
        std::uint64_t code = 0;
        int bit = 0;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v, ++bit)
                if ((adj[perm[u]] >> perm[v]) & 1)
                    code |= std::uint64_t{1} << bit;
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Two-colouring by BFS.
inline bool is_bipartite(const Graph& g) {
    std::vector<int> colour(g.vertex_count(), -1);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (colour[s] >= 0)
            continue;
        colour[s] = 0;
        std::vector<VertexId> queue{s};
        for (std::size_t h = 0; h < queue.size(); ++h) {
            const VertexId v = queue[h];
            for (VertexId w : g.neighbors(v)) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[v];
                    queue.push_back(w);
                } else if (colour[w] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Minimum cross edges over partitions of V into exactly `parts` nonempty
/// blocks, by enumerating all parts^|V| labelings (tiny graphs only).
inline std::int64_t brute_min_partition_cut(const Graph& g, int parts) {
    const std::size_t n = g.vertex_count();
    const auto edges = g.edges();
    std::vector<int> label(n, 0);
    std::int64_t best = INT64_MAX;
    while (true) {
        std::vector<char> used(parts, 0);
        for (int l : label)
            used[l] = 1;
        if (std::all_of(used.begin(), used.end(), [](char c) { return c != 0; })) {
            std::int64_t cross = 0;
            for (const Edge& e : edges)
                cross += label[e.u] != label[e.v];
            best = std::min(best, cross);
        }
        std::size_t i = 0;
        while (i < n && ++label[i] == parts)
            label[i++] = 0;
        if (i == n)
            break;
    }
    return best;
}

/// Number of connected components of G - removed by union-find.
inline std::int64_t brute_component_count(const Graph& g, const EdgeSet& removed) {
    std::vector<VertexId> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](VertexId x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::int64_t comps = static_cast<std::int64_t>(g.vertex_count());
    for (const Edge& e : g.edges()) {
        if (removed.contains(e))
            continue;
        const VertexId a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return comps;
}

inline VertexSet random_subset(std::mt19937_64& rng, std::size_t universe, std::size_t size) {
    std::vector<VertexId> all(universe);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(size);
    return VertexSet(std::move(all));
}

} // namespace hlnet::testing

#endif
