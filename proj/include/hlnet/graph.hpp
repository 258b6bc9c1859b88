#ifndef HLNET_GRAPH_HPP
#define HLNET_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "hlnet/common.hpp"
#include "hlnet/recipe.hpp"

namespace hlnet {

/// Undirected edge stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of vertex labels.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<VertexId> ids);
    explicit VertexSet(std::vector<VertexId> ids);

    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    bool contains(VertexId v) const;
    std::span<const VertexId> ids() const noexcept { return ids_; }
    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<VertexId> ids_;
};

/// Sorted, duplicate-free set of undirected edges.
class EdgeSet {
public:
    EdgeSet() = default;
    EdgeSet(std::initializer_list<Edge> edges);
    explicit EdgeSet(std::vector<Edge> edges);

    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }
    bool contains(Edge e) const;
    std::span<const Edge> edges() const noexcept { return edges_; }
    auto begin() const noexcept { return edges_.begin(); }
    auto end() const noexcept { return edges_.end(); }

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
    std::vector<Edge> edges_;
};

/// Materialized n-regular graph on 2^n vertices. Neighbors are stored flat,
/// n per vertex; for materialized recipes slot k of vertex v holds the partner
/// of v under the matching of the (k+1)-dimensional node containing v.
class Graph {
public:
    /// Build from an explicit edge list. Validates simplicity and that every
    /// vertex has degree exactly n.
    static Graph from_edges(int n, std::span<const Edge> edges);

    int dim() const noexcept { return n_; }
    std::size_t vertex_count() const noexcept { return std::size_t{1} << n_; }
    std::size_t edge_count() const noexcept { return vertex_count() * n_ / 2; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adj_.data() + std::size_t{v} * n_, static_cast<std::size_t>(n_)};
    }
    bool has_edge(VertexId u, VertexId v) const;
    bool is_vertex(VertexId v) const noexcept { return v < vertex_count(); }

    /// All edges, sorted (u < v).
    std::vector<Edge> edges() const;

    bool is_connected() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph materialize(const Recipe& r);
    Graph(int n, std::vector<VertexId> adj) : n_(n), adj_(std::move(adj)) {}

    int n_ = 0;
    std::vector<VertexId> adj_;
};

/// Label by the prefix rule (left half gets top bit 0) and add, for every
/// node, the matching edges (0‖i, 1‖map[i]). Throws ErrorCode::limit above
/// max_dimension().
Graph materialize(const Recipe& r);

/// |E(G[X])|.
std::int64_t induced_edge_count(const Graph& g, const VertexSet& x);

/// E_X: edges with exactly one endpoint in X.
EdgeSet boundary_edges(const Graph& g, const VertexSet& x);

/// Throws ErrorCode::invalid_argument if some member of x is not a vertex of g.
void require_vertices(const Graph& g, const VertexSet& x);

/// Throws ErrorCode::invalid_argument if some member of f is not an edge of g.
void require_edges(const Graph& g, const EdgeSet& f);

} // namespace hlnet

#endif
