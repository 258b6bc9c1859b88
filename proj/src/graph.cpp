#include "hlnet/graph.hpp"

#include <algorithm>

namespace hlnet {

// --- sets -------------------------------------------------------------------

VertexSet::VertexSet(std::initializer_list<VertexId> ids) : VertexSet(std::vector<VertexId>(ids)) {}

VertexSet::VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(VertexId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

EdgeSet::EdgeSet(std::initializer_list<Edge> edges) : EdgeSet(std::vector<Edge>(edges)) {}

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
    for (const Edge& e : edges_)
        if (e.u == e.v)
            fail(ErrorCode::invalid_argument, "self-loop at vertex " + std::to_string(e.u));
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

// --- Graph ------------------------------------------------------------------

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 0 || n > max_dimension())
        fail(ErrorCode::limit, "graph dimension " + std::to_string(n) + " outside [0, " +
                                   std::to_string(max_dimension()) + "]");
    const std::size_t count = std::size_t{1} << n;
    std::vector<VertexId> adj(count * n);
    std::vector<int> degree(count, 0);
    for (const Edge& e : edges) {
        if (e.u == e.v)
            fail(ErrorCode::invalid_argument, "self-loop at vertex " + std::to_string(e.u));
        if (e.v >= count)
            fail(ErrorCode::invalid_argument,
                 "vertex " + std::to_string(e.v) + " outside [0, " + std::to_string(count) + ")");
        for (VertexId x : {e.u, e.v}) {
            if (degree[x] == n)
                fail(ErrorCode::invalid_argument,
                     "vertex " + std::to_string(x) + " has degree above " + std::to_string(n));
        }
        const auto nu = adj.begin() + std::size_t{e.u} * n;
        if (std::find(nu, nu + degree[e.u], e.v) != nu + degree[e.u])
            fail(ErrorCode::invalid_argument, "duplicate edge " + std::to_string(e.u) + " " +
                                                  std::to_string(e.v));
        adj[std::size_t{e.u} * n + degree[e.u]++] = e.v;
        adj[std::size_t{e.v} * n + degree[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < count; ++v) {
        if (degree[v] != n)
            fail(ErrorCode::invalid_argument, "vertex " + std::to_string(v) + " has degree " +
                                                  std::to_string(degree[v]) + ", expected " +
                                                  std::to_string(n));
        std::sort(adj.begin() + v * n, adj.begin() + (v + 1) * n);
    }
    return Graph(n, std::move(adj));
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (!is_vertex(u) || !is_vertex(v))
        return false;
    const auto nb = neighbors(u);
    return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (VertexId u = 0; u < vertex_count(); ++u)
        for (VertexId w : neighbors(u))
            if (u < w)
                out.emplace_back(u, w);
    std::sort(out.begin(), out.end());
    return out;
}

bool Graph::is_connected() const {
    std::vector<char> seen(vertex_count(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == vertex_count();
}

namespace {

void fill(const Recipe& r, VertexId base, int n, std::vector<VertexId>& adj) {
    if (r.is_leaf())
        return;
    const int d = r.dim();
    const VertexId half = VertexId{1} << (d - 1);
    fill(r.left(), base, n, adj);
    fill(r.right(), base + half, n, adj);
    const MatchingPerm& m = r.matching();
    for (VertexId i = 0; i < half; ++i) {
        const VertexId u = base + i;
        const VertexId w = base + half + m[i];
        adj[std::size_t{u} * n + (d - 1)] = w;
        adj[std::size_t{w} * n + (d - 1)] = u;
    }
}

} // namespace

Graph materialize(const Recipe& r) {
    const int n = r.dim();
    if (n > max_dimension())
        fail(ErrorCode::limit, "materialize: dimension " + std::to_string(n) +
                                   " exceeds the configured maximum " +
                                   std::to_string(max_dimension()));
    std::vector<VertexId> adj((std::size_t{1} << n) * n);
    fill(r, 0, n, adj);
    return Graph(n, std::move(adj));
}

// --- queries ----------------------------------------------------------------

void require_vertices(const Graph& g, const VertexSet& x) {
    if (!x.empty() && !g.is_vertex(x.ids().back()))
        fail(ErrorCode::invalid_argument, "vertex " + std::to_string(x.ids().back()) +
                                              " is not in the graph (" +
                                              std::to_string(g.vertex_count()) + " vertices)");
}

void require_edges(const Graph& g, const EdgeSet& f) {
    for (const Edge& e : f)
        if (!g.has_edge(e.u, e.v))
            fail(ErrorCode::invalid_argument,
                 "pair " + std::to_string(e.u) + " " + std::to_string(e.v) + " is not an edge");
}

namespace {

std::vector<char> membership(const Graph& g, const VertexSet& x) {
    require_vertices(g, x);
    std::vector<char> in(g.vertex_count(), 0);
    for (VertexId v : x)
        in[v] = 1;
    return in;
}

} // namespace

std::int64_t induced_edge_count(const Graph& g, const VertexSet& x) {
    const auto in = membership(g, x);
    std::int64_t twice = 0;
    for (VertexId v : x)
        for (VertexId w : g.neighbors(v))
            twice += in[w];
    return twice / 2;
}

EdgeSet boundary_edges(const Graph& g, const VertexSet& x) {
    const auto in = membership(g, x);
    std::vector<Edge> out;
    for (VertexId v : x)
        for (VertexId w : g.neighbors(v))
            if (!in[w])
                out.emplace_back(v, w);
    return EdgeSet(std::move(out));
}

} // namespace hlnet
