#include "hlnet/hlnet.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "hlnet/edge_io.hpp"
#include "hlnet/extremal.hpp"
#include "hlnet/ms_construction.hpp"
#include "hlnet/oracles.hpp"
#include "hlnet/recipe.hpp"
#include "hlnet/report.hpp"
#include "hlnet/suite.hpp"

struct hl_recipe {
    hlnet::Recipe value;
};

struct hl_graph {
    hlnet::Graph value;
};

struct hl_edges {
    hlnet::EdgeSet value;
};

struct hl_report {
    std::vector<hlnet::ReportRow> rows;
};

struct hl_suite_result {
    hl_report report;
    std::vector<std::string> violations;
    bool budget_exhausted = false;
};

namespace {

using hlnet::ErrorCode;
using hlnet::fail;

thread_local std::string last_error;

template <typename F>
hl_status guarded(F&& body) {
    try {
        body();
        return HL_OK;
    } catch (const hlnet::Error& e) {
        last_error = e.what();
        return static_cast<hl_status>(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return HL_ERROR_LIMIT;
    } catch (const std::exception& e) {
        last_error = e.what();
        return HL_ERROR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return HL_ERROR_INTERNAL;
    }
}

template <typename T>
const T& need(const T* p, const char* name) {
    if (!p)
        fail(ErrorCode::invalid_argument, std::string(name) + " is NULL");
    return *p;
}

const char* need(const char* s, const char* name) {
    if (!s)
        fail(ErrorCode::invalid_argument, std::string(name) + " is NULL");
    return s;
}

template <typename T>
T& need_out(T* p, const char* name) {
    if (!p)
        fail(ErrorCode::invalid_argument, std::string(name) + " is NULL");
    return *p;
}

void check_capacity(std::size_t needed, std::size_t capacity, const char* what) {
    if (capacity < needed)
        fail(ErrorCode::invalid_argument, std::string(what) + " needs " + std::to_string(needed) +
                                              " entries, capacity is " + std::to_string(capacity));
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<hlnet::Edge> pairs_to_edges(const std::uint32_t* pairs, std::size_t count) {
    if (count > 0 && !pairs)
        fail(ErrorCode::invalid_argument, "pairs is NULL");
    std::vector<hlnet::Edge> edges;
    edges.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        edges.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    return edges;
}

hlnet::VertexSet vertex_set(const std::uint32_t* vertices, std::size_t count) {
    if (count > 0 && !vertices)
        fail(ErrorCode::invalid_argument, "vertices is NULL");
    hlnet::VertexSet set(std::vector<hlnet::VertexId>(vertices, vertices + count));
    if (set.size() != count)
        fail(ErrorCode::invalid_argument, "vertex list contains duplicates");
    return set;
}

hlnet::SearchLimits limits_from(const hl_search_limits* l) {
    hlnet::SearchLimits out;
    if (l) {
        out.max_nodes_expanded = l->max_nodes_expanded;
        out.time_budget = l->time_budget;
        out.threads = l->threads;
    }
    return out;
}

void fill_result(hl_search_result& out, const std::optional<std::int64_t>& value,
                 hlnet::SearchStatus status, std::uint64_t nodes) {
    out.found = value.has_value();
    out.value = value.value_or(0);
    out.complete = status == hlnet::SearchStatus::complete;
    out.nodes_expanded = nodes;
}

hlnet::ReportFormat to_format(hl_format f) {
    switch (f) {
    case HL_FORMAT_CSV:
        return hlnet::ReportFormat::csv;
    case HL_FORMAT_JSON:
        return hlnet::ReportFormat::json;
    case HL_FORMAT_TEXT:
        return hlnet::ReportFormat::text;
    }
    fail(ErrorCode::invalid_argument, "unknown report format");
}

} // namespace

extern "C" {

const char* hl_version(void) { return "0.1.0"; }

const char* hl_last_error(void) { return last_error.c_str(); }

void hl_string_free(char* s) { std::free(s); }

int hl_max_dimension(void) { return hlnet::max_dimension(); }

hl_status hl_set_max_dimension(int n) {
    return guarded([&] { hlnet::set_max_dimension(n); });
}

// --- recipes ------------------------------------------------------------------

hl_status hl_recipe_leaf(hl_recipe** out) {
    return guarded([&] { need_out(out, "out") = new hl_recipe{hlnet::Recipe::leaf()}; });
}

hl_status hl_recipe_hypercube(int n, hl_recipe** out) {
    return guarded([&] { need_out(out, "out") = new hl_recipe{hlnet::hypercube(n)}; });
}

hl_status hl_recipe_random(int n, uint64_t seed, hl_recipe** out) {
    return guarded([&] { need_out(out, "out") = new hl_recipe{hlnet::random_hl(n, seed)}; });
}

hl_status hl_recipe_g84(hl_recipe** out) {
    return guarded([&] { need_out(out, "out") = new hl_recipe{hlnet::g84()}; });
}

hl_status hl_recipe_from_source(const char* source, int n, hl_recipe** out) {
    return guarded([&] {
        need(source, "source");
        need_out(out, "out") = new hl_recipe{hlnet::recipe_from_source(source, n)};
    });
}

hl_status hl_recipe_compose(const hl_recipe* left, const hl_recipe* right,
                            const uint32_t* matching, size_t matching_len, hl_recipe** out) {
    return guarded([&] {
        const auto& l = need(left, "left");
        const auto& r = need(right, "right");
        if (matching_len > 0 && !matching)
            fail(ErrorCode::invalid_argument, "matching is NULL");
        hlnet::MatchingPerm m(std::vector<hlnet::VertexId>(matching, matching + matching_len));
        auto& dst = need_out(out, "out");
        dst = new hl_recipe{hlnet::Recipe::compose(l.value, r.value, std::move(m))};
    });
}

hl_status hl_recipe_split(const hl_recipe* r, hl_recipe** left, hl_recipe** right,
                          uint32_t* matching, size_t capacity, size_t* len) {
    return guarded([&] {
        auto [l, rr, m] = need(r, "recipe").value.split();
        if (len)
            *len = m.size();
        if (matching) {
            check_capacity(m.size(), capacity, "matching");
            std::copy(m.values().begin(), m.values().end(), matching);
        }
        if (left)
            *left = new hl_recipe{l};
        if (right)
            *right = new hl_recipe{rr};
    });
}

int hl_recipe_dim(const hl_recipe* r) { return r ? r->value.dim() : -1; }

int hl_recipe_equal(const hl_recipe* a, const hl_recipe* b) {
    return a && b && a->value == b->value;
}

hl_status hl_recipe_to_json(const hl_recipe* r, char** out) {
    return guarded([&] {
        const std::string text = hlnet::recipe_to_json(need(r, "recipe").value);
        need_out(out, "out") = copy_string(text);
    });
}

hl_status hl_recipe_from_json(const char* text, hl_recipe** out) {
    return guarded([&] {
        need(text, "text");
        need_out(out, "out") = new hl_recipe{hlnet::recipe_from_json(text)};
    });
}

hl_status hl_recipe_save(const hl_recipe* r, const char* path) {
    return guarded([&] { hlnet::save_recipe(need(r, "recipe").value, need(path, "path")); });
}

hl_status hl_recipe_load(const char* path, hl_recipe** out) {
    return guarded([&] {
        auto recipe = hlnet::load_recipe(need(path, "path"));
        need_out(out, "out") = new hl_recipe{std::move(recipe)};
    });
}

void hl_recipe_free(hl_recipe* r) { delete r; }

// --- graphs -------------------------------------------------------------------

hl_status hl_graph_materialize(const hl_recipe* r, hl_graph** out) {
    return guarded([&] {
        auto g = hlnet::materialize(need(r, "recipe").value);
        need_out(out, "out") = new hl_graph{std::move(g)};
    });
}

hl_status hl_graph_from_edges(int n, const uint32_t* pairs, size_t count, hl_graph** out) {
    return guarded([&] {
        const auto edges = pairs_to_edges(pairs, count);
        auto g = hlnet::Graph::from_edges(n, edges);
        need_out(out, "out") = new hl_graph{std::move(g)};
    });
}

hl_status hl_graph_load(const char* path, hl_graph** out) {
    return guarded([&] {
        auto g = hlnet::load_graph(need(path, "path"));
        need_out(out, "out") = new hl_graph{std::move(g)};
    });
}

hl_status hl_graph_save(const hl_graph* g, const char* path) {
    return guarded([&] { hlnet::save_graph(need(g, "graph").value, need(path, "path")); });
}

int hl_graph_dim(const hl_graph* g) { return g ? g->value.dim() : -1; }

uint64_t hl_graph_vertex_count(const hl_graph* g) { return g ? g->value.vertex_count() : 0; }

uint64_t hl_graph_edge_count(const hl_graph* g) { return g ? g->value.edge_count() : 0; }

int hl_graph_is_connected(const hl_graph* g) { return g && g->value.is_connected(); }

hl_status hl_graph_neighbors(const hl_graph* g, uint32_t v, uint32_t* out, size_t capacity,
                             size_t* len) {
    return guarded([&] {
        const auto& graph = need(g, "graph").value;
        if (!graph.is_vertex(v))
            fail(ErrorCode::invalid_argument, "vertex " + std::to_string(v) + " out of range");
        const auto nb = graph.neighbors(v);
        if (len)
            *len = nb.size();
        check_capacity(nb.size(), capacity, "neighbor buffer");
        if (!out)
            fail(ErrorCode::invalid_argument, "out is NULL");
        std::copy(nb.begin(), nb.end(), out);
    });
}

void hl_graph_free(hl_graph* g) { delete g; }

hl_status hl_induced_edge_count(const hl_graph* g, const uint32_t* vertices, size_t count,
                                int64_t* out) {
    return guarded([&] {
        const auto set = vertex_set(vertices, count);
        need_out(out, "out") = hlnet::induced_edge_count(need(g, "graph").value, set);
    });
}

hl_status hl_boundary_edges(const hl_graph* g, const uint32_t* vertices, size_t count,
                            hl_edges** out) {
    return guarded([&] {
        const auto set = vertex_set(vertices, count);
        auto edges = hlnet::boundary_edges(need(g, "graph").value, set);
        need_out(out, "out") = new hl_edges{std::move(edges)};
    });
}

// --- edge sets ----------------------------------------------------------------

hl_status hl_edges_create(const uint32_t* pairs, size_t count, hl_edges** out) {
    return guarded([&] {
        hlnet::EdgeSet set(pairs_to_edges(pairs, count));
        need_out(out, "out") = new hl_edges{std::move(set)};
    });
}

size_t hl_edges_size(const hl_edges* e) { return e ? e->value.size() : 0; }

hl_status hl_edges_at(const hl_edges* e, size_t index, uint32_t* u, uint32_t* v) {
    return guarded([&] {
        const auto& set = need(e, "edges").value;
        if (index >= set.size())
            fail(ErrorCode::invalid_argument, "edge index out of range");
        need_out(u, "u") = set.edges()[index].u;
        need_out(v, "v") = set.edges()[index].v;
    });
}

hl_status hl_edges_load(const char* path, hl_edges** out) {
    return guarded([&] {
        auto set = hlnet::load_edge_list(need(path, "path"));
        need_out(out, "out") = new hl_edges{std::move(set)};
    });
}

hl_status hl_edges_save_cut(const hl_edges* e, int n, uint64_t g, const char* path) {
    return guarded([&] {
        const auto& set = need(e, "edges").value;
        std::ofstream file(need(path, "path"), std::ios::binary);
        if (!file)
            fail(ErrorCode::io, std::string("cannot open ") + path + " for writing");
        hlnet::write_cut(file, n, g, set);
        if (!file)
            fail(ErrorCode::io, std::string("write to ") + path + " failed");
    });
}

void hl_edges_free(hl_edges* e) { delete e; }

// --- closed forms -------------------------------------------------------------

hl_status hl_decompose(uint64_t g, int* exponents, size_t capacity, size_t* len) {
    return guarded([&] {
        const auto d = hlnet::decompose(g);
        if (len)
            *len = d.exponents.size();
        check_capacity(d.exponents.size(), capacity, "exponent buffer");
        if (!exponents)
            fail(ErrorCode::invalid_argument, "exponents is NULL");
        std::copy(d.exponents.begin(), d.exponents.end(), exponents);
    });
}

hl_status hl_extremal_edges(uint64_t g, int64_t* out) {
    return guarded([&] { need_out(out, "out") = hlnet::extremal_edges(g); });
}

hl_status hl_extremal_increment(uint64_t i, int64_t* out) {
    return guarded([&] { need_out(out, "out") = hlnet::extremal_increment(i); });
}

hl_status hl_component_edge_connectivity(int n, uint64_t g, hl_cut_mode mode, int64_t* value,
                                         int* proven) {
    return guarded([&] {
        const auto m = mode == HL_MODE_STRICT ? hlnet::CutMode::strict : hlnet::CutMode::permissive;
        const auto r = hlnet::component_edge_connectivity(n, g, m);
        need_out(value, "value") = r.value;
        if (proven)
            *proven = r.proven;
    });
}

uint64_t hl_proven_g_limit(int n) {
    if (n < 0 || n > 126)
        return 0;
    return hlnet::proven_g_limit(n);
}

hl_status hl_check_superadditive(uint64_t g0, uint64_t g1, int* holds) {
    return guarded([&] { need_out(holds, "holds") = hlnet::check_superadditive(g0, g1); });
}

hl_status hl_check_slack(int n, uint64_t g, int* holds) {
    return guarded([&] { need_out(holds, "holds") = hlnet::check_slack(n, g); });
}

hl_status hl_check_merge(uint64_t i, uint64_t j, int* holds) {
    return guarded([&] { need_out(holds, "holds") = hlnet::check_merge(i, j); });
}

hl_status hl_check_strict_increase(int n, uint64_t g, int* holds) {
    return guarded([&] { need_out(holds, "holds") = hlnet::check_strict_increase(n, g); });
}

// --- constructions ------------------------------------------------------------

hl_status hl_extremal_subgraph(const hl_recipe* r, uint64_t g, uint32_t* vertices,
                               size_t capacity, size_t* len) {
    return guarded([&] {
        const auto trace = hlnet::extremal_subgraph(need(r, "recipe").value, g);
        if (len)
            *len = trace.selected.size();
        check_capacity(trace.selected.size(), capacity, "vertex buffer");
        if (!vertices)
            fail(ErrorCode::invalid_argument, "vertices is NULL");
        std::copy(trace.selected.begin(), trace.selected.end(), vertices);
    });
}

hl_status hl_build_component_cut(const hl_recipe* r, uint64_t g, hl_edges** out) {
    return guarded([&] {
        auto cut = hlnet::build_component_cut(need(r, "recipe").value, g);
        need_out(out, "out") = new hl_edges{std::move(cut)};
    });
}

hl_status hl_verify_cut(const hl_graph* g, const hl_edges* cut, uint64_t target_g,
                        hl_cut_report* out) {
    return guarded([&] {
        const auto r = hlnet::verify_cut(need(g, "graph").value, need(cut, "cut").value, target_g);
        auto& dst = need_out(out, "out");
        dst.cut_size = r.cut_size;
        dst.component_count = r.component_count;
        dst.isolated_count = r.isolated_count;
        dst.predicted_size = r.predicted_size;
        dst.matches_prediction = r.matches_prediction;
    });
}

// --- oracles ------------------------------------------------------------------

hl_status hl_oracle_max_induced(const hl_graph* g, size_t k, const hl_search_limits* limits,
                                hl_search_result* out, uint32_t* witness, size_t capacity) {
    return guarded([&] {
        const auto& graph = need(g, "graph").value;
        auto& dst = need_out(out, "out");
        if (witness)
            check_capacity(k, capacity, "witness buffer");
        const auto r = hlnet::max_induced_edges(graph, k, limits_from(limits));
        fill_result(dst, r.value, r.status, r.nodes_expanded);
        if (witness)
            std::copy(r.witness.begin(), r.witness.end(), witness);
    });
}

hl_status hl_oracle_min_cut(const hl_graph* g, size_t parts, const hl_search_limits* limits,
                            hl_search_result* out, uint32_t* block_of, size_t capacity) {
    return guarded([&] {
        const auto& graph = need(g, "graph").value;
        auto& dst = need_out(out, "out");
        if (block_of)
            check_capacity(graph.vertex_count(), capacity, "block buffer");
        const auto r = hlnet::min_component_edge_cut(graph, parts, limits_from(limits));
        fill_result(dst, r.value, r.status, r.nodes_expanded);
        if (block_of)
            for (std::size_t b = 0; b < r.witness.blocks.size(); ++b)
                for (auto v : r.witness.blocks[b])
                    block_of[v] = static_cast<uint32_t>(b);
    });
}

hl_status hl_components_after(const hl_graph* g, const hl_edges* removed, size_t* count,
                              uint32_t* component_of, size_t capacity) {
    return guarded([&] {
        const auto& graph = need(g, "graph").value;
        const hlnet::EdgeSet empty;
        const auto w = hlnet::components_after(graph, removed ? removed->value : empty);
        need_out(count, "count") = w.blocks.size();
        if (component_of) {
            check_capacity(graph.vertex_count(), capacity, "component buffer");
            for (std::size_t b = 0; b < w.blocks.size(); ++b)
                for (auto v : w.blocks[b])
                    component_of[v] = static_cast<uint32_t>(b);
        }
    });
}

hl_status hl_partition_save(const hl_graph* g, const uint32_t* block_of, size_t len,
                            const char* path) {
    return guarded([&] {
        const auto& graph = need(g, "graph").value;
        need(block_of, "block_of");
        if (len != graph.vertex_count())
            fail(ErrorCode::invalid_argument, "block_of must have one entry per vertex");
        std::vector<std::vector<hlnet::VertexId>> blocks;
        for (std::size_t v = 0; v < len; ++v) {
            if (block_of[v] >= len)
                fail(ErrorCode::invalid_argument, "block index out of range");
            if (block_of[v] >= blocks.size())
                blocks.resize(block_of[v] + 1);
            blocks[block_of[v]].push_back(static_cast<hlnet::VertexId>(v));
        }
        std::vector<hlnet::VertexSet> sets;
        for (auto& b : blocks) {
            if (b.empty())
                fail(ErrorCode::invalid_argument, "block indices must be contiguous");
            sets.emplace_back(std::move(b));
        }
        std::int64_t cross = 0;
        for (const auto& e : graph.edges())
            cross += block_of[e.u] != block_of[e.v];
        std::ofstream file(need(path, "path"), std::ios::binary);
        if (!file)
            fail(ErrorCode::io, std::string("cannot open ") + path + " for writing");
        hlnet::write_partition(file, sets, cross);
    });
}

hl_status hl_isomorphic_small(const hl_graph* a, const hl_graph* b, int* out) {
    return guarded([&] {
        need_out(out, "out") = hlnet::isomorphic_small(need(a, "a").value, need(b, "b").value);
    });
}

// --- reports ------------------------------------------------------------------

hl_status hl_parse_format(const char* name, hl_format* out) {
    return guarded([&] {
        switch (hlnet::parse_report_format(need(name, "name"))) {
        case hlnet::ReportFormat::csv:
            need_out(out, "out") = HL_FORMAT_CSV;
            break;
        case hlnet::ReportFormat::json:
            need_out(out, "out") = HL_FORMAT_JSON;
            break;
        case hlnet::ReportFormat::text:
            need_out(out, "out") = HL_FORMAT_TEXT;
            break;
        }
    });
}

hl_status hl_report_create(hl_report** out) {
    return guarded([&] { need_out(out, "out") = new hl_report{}; });
}

hl_status hl_report_add_row(hl_report* report, const hl_report_row* row) {
    return guarded([&] {
        auto& rep = need_out(report, "report");
        const auto& src = need(row, "row");
        hlnet::ReportRow r;
        r.check = src.check ? src.check : "";
        r.n = src.n;
        r.g = src.g;
        r.formula_value = src.formula_value;
        if (src.has_construction)
            r.construction_value = src.construction_value;
        if (src.has_oracle)
            r.oracle_value = src.oracle_value;
        r.status = src.status ? src.status : "";
        r.elapsed_ms = src.elapsed_ms;
        rep.rows.push_back(std::move(r));
    });
}

size_t hl_report_row_count(const hl_report* report) { return report ? report->rows.size() : 0; }

hl_status hl_report_get_row(const hl_report* report, size_t index, hl_report_row* out) {
    return guarded([&] {
        const auto& rep = need(report, "report");
        if (index >= rep.rows.size())
            fail(ErrorCode::invalid_argument, "row index out of range");
        const auto& r = rep.rows[index];
        auto& dst = need_out(out, "out");
        dst.check = r.check.c_str();
        dst.n = r.n;
        dst.g = r.g;
        dst.formula_value = r.formula_value;
        dst.has_construction = r.construction_value.has_value();
        dst.construction_value = r.construction_value.value_or(0);
        dst.has_oracle = r.oracle_value.has_value();
        dst.oracle_value = r.oracle_value.value_or(0);
        dst.status = r.status.c_str();
        dst.elapsed_ms = r.elapsed_ms;
    });
}

hl_status hl_report_render(const hl_report* report, hl_format format, char** out) {
    return guarded([&] {
        const auto text = hlnet::render_report(need(report, "report").rows, to_format(format));
        need_out(out, "out") = copy_string(text);
    });
}

hl_status hl_report_save(const hl_report* report, hl_format format, const char* path) {
    return guarded([&] {
        const auto& rep = need(report, "report");
        std::ofstream file(need(path, "path"), std::ios::binary);
        if (!file)
            fail(ErrorCode::io, std::string("cannot open ") + path + " for writing");
        hlnet::write_report(file, rep.rows, to_format(format));
        if (!file)
            fail(ErrorCode::io, std::string("write to ") + path + " failed");
    });
}

void hl_report_free(hl_report* report) { delete report; }

// --- suite --------------------------------------------------------------------

void hl_suite_config_default(hl_suite_config* cfg) {
    if (!cfg)
        return;
    const hlnet::SuiteConfig d;
    cfg->g_max = d.g_max;
    cfg->n_max = d.n_max;
    cfg->monotone_n_max = d.monotone_n_max;
    cfg->increment_max = d.increment_max;
    cfg->construct_n_min = d.construct_n_min;
    cfg->construct_n_max = d.construct_n_max;
    cfg->random_recipes = d.random_recipes;
    cfg->seed = d.seed;
    cfg->oracle_n_max = d.oracle_n_max;
    cfg->limits = {d.limits.max_nodes_expanded, d.limits.time_budget, d.limits.threads};
    cfg->timing = d.timing;
    cfg->sections = HL_SUITE_ALL;
}

hl_status hl_suite_run(const hl_suite_config* cfg, hl_suite_result** out) {
    return guarded([&] {
        const auto& c = need(cfg, "config");
        auto& dst = need_out(out, "out");
        hlnet::SuiteConfig sc;
        sc.g_max = c.g_max;
        sc.n_max = c.n_max;
        sc.monotone_n_max = c.monotone_n_max;
        sc.increment_max = c.increment_max;
        sc.construct_n_min = c.construct_n_min;
        sc.construct_n_max = c.construct_n_max;
        sc.random_recipes = c.random_recipes;
        sc.seed = c.seed;
        sc.oracle_n_max = c.oracle_n_max;
        sc.limits = limits_from(&c.limits);
        sc.timing = c.timing != 0;

        hlnet::SuiteResult result;
        if (c.sections & HL_SUITE_LEMMAS)
            hlnet::run_lemma_checks(sc, result);
        if (c.sections & HL_SUITE_CONSTRUCTION)
            hlnet::run_construction_checks(sc, result);
        if (c.sections & HL_SUITE_ORACLES)
            hlnet::run_oracle_checks(sc, result);

        auto* res = new hl_suite_result{};
        res->report.rows = std::move(result.rows);
        for (const auto& v : result.violations)
            res->violations.push_back(v.describe());
        res->budget_exhausted = result.budget_exhausted;
        dst = res;
    });
}

const hl_report* hl_suite_result_report(const hl_suite_result* r) { return r ? &r->report : nullptr; }

size_t hl_suite_result_violation_count(const hl_suite_result* r) {
    return r ? r->violations.size() : 0;
}

const char* hl_suite_result_violation(const hl_suite_result* r, size_t index) {
    if (!r || index >= r->violations.size())
        return nullptr;
    return r->violations[index].c_str();
}

int hl_suite_result_budget_exhausted(const hl_suite_result* r) { return r && r->budget_exhausted; }

void hl_suite_result_free(hl_suite_result* r) { delete r; }

} // extern "C"
