#include "hlnet/ms_construction.hpp"

#include <numeric>

#include "hlnet/extremal.hpp"

namespace hlnet {

MsTrace extremal_subgraph(const Recipe& r, std::uint64_t g) {
    const int n = r.dim();
    if (g < 1 || n >= 63 || g >= (std::uint64_t{1} << n))
        fail(ErrorCode::domain, "extremal_subgraph: need 1 <= g < 2^" + std::to_string(n) +
                                    " (got g=" + std::to_string(g) + ")");
    if (n > max_dimension())
        fail(ErrorCode::limit, "extremal_subgraph: dimension " + std::to_string(n) +
                                   " exceeds the configured maximum");

    MsTrace trace;
    std::vector<VertexId> selected;
    selected.reserve(g);

    // Current search space D*_{i-1}: a subrecipe whose vertices are the label
    // range [base, base + 2^dim).
    Recipe current = r;
    VertexId base = 0;
    std::string path;
    for (int t : decompose(g).exponents) {
        while (current.dim() > t + 1) {
            current = Recipe(current.left());
            path += 'L';
        }
        // current is T_i = D_i (+) D*_i.
        MsBlock block;
        block.path = path + 'L';
        block.dim = t;
        std::vector<VertexId> ids(std::size_t{1} << t);
        std::iota(ids.begin(), ids.end(), base);
        selected.insert(selected.end(), ids.begin(), ids.end());
        block.vertices = VertexSet(std::move(ids));
        trace.blocks.push_back(std::move(block));

        base += VertexId{1} << t;
        current = Recipe(current.right());
        path += 'R';
    }
    trace.selected = VertexSet(std::move(selected));
    return trace;
}

EdgeSet build_component_cut(const Recipe& r, std::uint64_t g) {
    const MsTrace trace = extremal_subgraph(r, g);
    const Graph graph = materialize(r);
    std::vector<Edge> cut;
    cut.reserve(trace.selected.size() * graph.dim());
    for (VertexId v : trace.selected)
        for (VertexId w : graph.neighbors(v))
            cut.emplace_back(v, w);
    return EdgeSet(std::move(cut));
}

CutReport verify_cut(const Graph& g, const EdgeSet& cut, std::uint64_t target_g) {
    require_edges(g, cut);

    const std::size_t count = g.vertex_count();
    std::vector<char> seen(count, 0);
    std::vector<VertexId> stack;
    CutReport report;
    for (VertexId root = 0; root < count; ++root) {
        if (seen[root])
            continue;
        ++report.component_count;
        std::size_t size = 0;
        seen[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            ++size;
            for (VertexId w : g.neighbors(v)) {
                if (!seen[w] && !cut.contains(Edge(v, w))) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        if (size == 1)
            ++report.isolated_count;
    }

    report.cut_size = static_cast<std::int64_t>(cut.size());
    if (target_g == 0) {
        report.predicted_size = 0;
    } else if (g.dim() >= 1 && target_g < count) {
        report.predicted_size =
            component_edge_connectivity(g.dim(), target_g, CutMode::permissive).value;
    } else {
        fail(ErrorCode::domain, "verify_cut: target g must lie below the vertex count");
    }
    report.matches_prediction =
        report.cut_size == report.predicted_size &&
        report.component_count >= static_cast<std::int64_t>(target_g) + 1;
    return report;
}

} // namespace hlnet
