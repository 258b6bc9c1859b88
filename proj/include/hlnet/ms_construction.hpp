#ifndef HLNET_MS_CONSTRUCTION_HPP
#define HLNET_MS_CONSTRUCTION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hlnet/graph.hpp"
#include "hlnet/recipe.hpp"

namespace hlnet {

/// One selected block D_i of the extremal subgraph.
struct MsBlock {
    /// Descent from the root: one 'L' or 'R' per split.
    std::string path;
    int dim = 0;
    VertexSet vertices;
};

struct MsTrace {
    std::vector<MsBlock> blocks;
    VertexSet selected;
};

/// Greedy nested-subcube selection. For each exponent t_i of g, descend
/// left from the current subnetwork until a (t_i + 1)-dimensional node T_i
/// is reached, select its left half D_i and continue inside its right half.
/// The union induces exactly extremal_edges(g) edges in any HL-network.
/// Requires 1 <= g < 2^dim.
MsTrace extremal_subgraph(const Recipe& r, std::uint64_t g);

/// All edges incident to the vertices chosen by extremal_subgraph:
/// boundary edges plus induced edges, n*g - e_g in total. Removing them
/// isolates the g chosen vertices.
EdgeSet build_component_cut(const Recipe& r, std::uint64_t g);

struct CutReport {
    std::int64_t cut_size = 0;
    std::int64_t component_count = 0;
    std::int64_t isolated_count = 0;
    /// n*target_g - e_target_g (permissive evaluation).
    std::int64_t predicted_size = 0;
    /// cut_size == predicted_size and G - F has at least target_g + 1
    /// components.
    bool matches_prediction = false;
};

/// Components of G - F by traversal. Throws ErrorCode::invalid_argument if F
/// holds a non-edge.
CutReport verify_cut(const Graph& g, const EdgeSet& cut, std::uint64_t target_g);

} // namespace hlnet

#endif
