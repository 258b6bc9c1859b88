#ifndef HLNET_EDGE_IO_HPP
#define HLNET_EDGE_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "hlnet/graph.hpp"

namespace hlnet {

// Plain-text edge lists: one "u v" pair per line, u < v, decimal labels,
// preceded by a single '#' header line.
//
//   graph:     # hl-graph n=<n> vertices=<2^n> edges=<n*2^(n-1)>
//   cut:       # hl-cut n=<n> g=<g> size=<|F|>
//   partition: # partition blocks=<k> cross=<value>, then one block per line

void write_graph(std::ostream& out, const Graph& g);
void write_cut(std::ostream& out, int n, std::uint64_t g, const EdgeSet& cut);
void write_partition(std::ostream& out, const std::vector<VertexSet>& blocks,
                     std::int64_t cross);

/// Parses a graph export. Header counts must agree with the body.
Graph read_graph(std::istream& in);

/// Parses any edge list (graph or cut export, or headerless); '#' lines are
/// skipped. Duplicate pairs are rejected.
EdgeSet read_edge_list(std::istream& in);

Graph load_graph(const std::filesystem::path& path);
void save_graph(const Graph& g, const std::filesystem::path& path);
EdgeSet load_edge_list(const std::filesystem::path& path);

} // namespace hlnet

#endif
