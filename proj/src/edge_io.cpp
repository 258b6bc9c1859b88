#include "hlnet/edge_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace hlnet {

namespace {

void write_pairs(std::ostream& out, std::span<const Edge> edges) {
    for (const Edge& e : edges)
        out << e.u << ' ' << e.v << '\n';
}

[[noreturn]] void line_error(std::size_t line_no, const std::string& what) {
    fail(ErrorCode::parse, "line " + std::to_string(line_no) + ": " + what);
}

std::uint64_t parse_number(std::string_view token, std::size_t line_no) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
        line_error(line_no, "expected a non-negative integer, got '" + std::string(token) + "'");
    return value;
}

// Splits on blanks; returns the tokens.
std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

struct ParsedList {
    std::vector<Edge> edges;
    std::vector<std::string> headers;
};

ParsedList parse_list(std::istream& in) {
    ParsedList out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line[0] == '#') {
            out.headers.push_back(line);
            continue;
        }
        const auto tok = tokens(line);
        if (tok.empty())
            continue;
        if (tok.size() != 2)
            line_error(line_no, "expected two vertex labels");
        const auto u = parse_number(tok[0], line_no);
        const auto v = parse_number(tok[1], line_no);
        if (u > UINT32_MAX || v > UINT32_MAX)
            line_error(line_no, "vertex label too large");
        if (u == v)
            line_error(line_no, "self-loop");
        out.edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    return out;
}

// Value of key=<int> inside a header line, or -1.
std::int64_t header_field(const std::string& header, const std::string& key) {
    for (auto tok : tokens(header)) {
        if (tok.size() > key.size() + 1 && tok.substr(0, key.size()) == key &&
            tok[key.size()] == '=') {
            auto rest = tok.substr(key.size() + 1);
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
            if (ec == std::errc() && ptr == rest.data() + rest.size())
                return value;
        }
    }
    return -1;
}

} // namespace

void write_graph(std::ostream& out, const Graph& g) {
    out << "# hl-graph n=" << g.dim() << " vertices=" << g.vertex_count()
        << " edges=" << g.edge_count() << '\n';
    const auto edges = g.edges();
    write_pairs(out, edges);
}

void write_cut(std::ostream& out, int n, std::uint64_t g, const EdgeSet& cut) {
    out << "# hl-cut n=" << n << " g=" << g << " size=" << cut.size() << '\n';
    write_pairs(out, cut.edges());
}

void write_partition(std::ostream& out, const std::vector<VertexSet>& blocks, std::int64_t cross) {
    out << "# partition blocks=" << blocks.size() << " cross=" << cross << '\n';
    for (const VertexSet& block : blocks) {
        bool first = true;
        for (VertexId v : block) {
            if (!first)
                out << ' ';
            out << v;
            first = false;
        }
        out << '\n';
    }
}

Graph read_graph(std::istream& in) {
    ParsedList list = parse_list(in);
    const std::string* header = nullptr;
    for (const auto& h : list.headers)
        if (h.rfind("# hl-graph", 0) == 0)
            header = &h;
    if (!header)
        fail(ErrorCode::parse, "missing '# hl-graph n=...' header");
    const std::int64_t n = header_field(*header, "n");
    const std::int64_t vertices = header_field(*header, "vertices");
    const std::int64_t edges = header_field(*header, "edges");
    if (n < 0 || n > 30)
        fail(ErrorCode::parse, "graph header has no valid n");
    if (vertices != (std::int64_t{1} << n))
        fail(ErrorCode::parse, "header vertices=" + std::to_string(vertices) + " disagrees with n=" +
                                   std::to_string(n));
    if (edges != static_cast<std::int64_t>(list.edges.size()))
        fail(ErrorCode::parse, "header edges=" + std::to_string(edges) + " but the file lists " +
                                   std::to_string(list.edges.size()));
    return Graph::from_edges(static_cast<int>(n), list.edges);
}

EdgeSet read_edge_list(std::istream& in) {
    ParsedList list = parse_list(in);
    const std::size_t listed = list.edges.size();
    EdgeSet set(std::move(list.edges));
    if (set.size() != listed)
        fail(ErrorCode::parse, "edge list contains duplicate pairs");
    return set;
}

Graph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::io, "cannot open " + path.string());
    return read_graph(in);
}

void save_graph(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail(ErrorCode::io, "cannot open " + path.string() + " for writing");
    write_graph(out, g);
    if (!out)
        fail(ErrorCode::io, "write to " + path.string() + " failed");
}

EdgeSet load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::io, "cannot open " + path.string());
    return read_edge_list(in);
}

} // namespace hlnet
