#ifndef HLNET_ORACLES_HPP
#define HLNET_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hlnet/graph.hpp"

// Brute-force ground truth. Nothing in here may call into extremal.hpp: the
// searches exist to check those formulas.

namespace hlnet {

struct SearchLimits {
    /// Budget on search-tree nodes (summed over workers); 0 = unlimited.
    std::uint64_t max_nodes_expanded = 0;
    /// Wall-clock budget in seconds; 0 = unlimited.
    double time_budget = 0.0;
    /// Worker threads; 0 or 1 runs on the calling thread.
    unsigned threads = 1;
};

enum class SearchStatus { complete, incomplete };

/// Blocks are nonempty, disjoint and cover V, ordered by smallest label.
struct PartitionWitness {
    std::vector<VertexSet> blocks;
    EdgeSet cross_edges;
};

struct InducedSearchResult {
    /// Best value found; empty only if the budget ran out before any
    /// k-subset was completed.
    std::optional<std::int64_t> value;
    /// Lexicographically smallest optimal subset when complete.
    VertexSet witness;
    SearchStatus status = SearchStatus::complete;
    std::uint64_t nodes_expanded = 0;
};

struct CutSearchResult {
    std::optional<std::int64_t> value;
    /// Lexicographically smallest restricted-growth string among optima.
    PartitionWitness witness;
    SearchStatus status = SearchStatus::complete;
    std::uint64_t nodes_expanded = 0;
};

/// Graphs handled by the exhaustive searches hold at most 64 vertices.
inline constexpr std::size_t oracle_max_vertices = 64;

/// Exact max |E(G[X])| over |X| = k by ordered subset DFS. A vertex joining
/// X gains at most min(|X|, n) edges; branches whose optimistic total cannot
/// beat the incumbent are cut. Requires 1 <= k <= |V|.
InducedSearchResult max_induced_edges(const Graph& g, std::size_t k,
                                      const SearchLimits& limits = {});

/// Exact cλ_parts(G): minimum number of cross edges over partitions of V into
/// exactly `parts` nonempty blocks, enumerated as restricted-growth strings.
/// Requires 1 <= parts <= |V|.
CutSearchResult min_component_edge_cut(const Graph& g, std::size_t parts,
                                       const SearchLimits& limits = {});

/// Connected components of G - removed. cross_edges are the removed edges
/// joining distinct components.
PartitionWitness components_after(const Graph& g, const EdgeSet& removed);

/// Exact isomorphism test by degree-refined backtracking. Both graphs must
/// have at most 16 vertices.
bool isomorphic_small(const Graph& a, const Graph& b);

inline constexpr std::size_t isomorphism_max_vertices = 16;

} // namespace hlnet

#endif
