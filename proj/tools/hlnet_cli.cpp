// hlnet command-line harness. Talks to the library only through hlnet.h.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hlnet/hlnet.h"

namespace {

enum Exit { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_budget = 3 };

struct Failure {
    std::string message;
};

void check(hl_status s) {
    if (s != HL_OK)
        throw Failure{hl_last_error()};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using RecipePtr = std::unique_ptr<hl_recipe, Deleter<hl_recipe, hl_recipe_free>>;
using GraphPtr = std::unique_ptr<hl_graph, Deleter<hl_graph, hl_graph_free>>;
using EdgesPtr = std::unique_ptr<hl_edges, Deleter<hl_edges, hl_edges_free>>;
using ReportPtr = std::unique_ptr<hl_report, Deleter<hl_report, hl_report_free>>;
using SuitePtr = std::unique_ptr<hl_suite_result, Deleter<hl_suite_result, hl_suite_result_free>>;

struct Options {
    int n = -1;
    std::optional<std::uint64_t> g;
    std::optional<std::uint64_t> g_max;
    bool g_all = false;
    std::string recipe = "hypercube";
    std::optional<std::uint64_t> seed;
    std::string mode = "strict";
    std::string format = "text";
    std::string out;
    double time_budget = 0.0;
    std::uint64_t max_nodes = 0;
    unsigned threads = 1;

    // Command-specific.
    std::string graph_path;
    std::string cut_path;
    std::string graph_out;
    std::string cut_out;
    std::string witness_out;
    std::size_t parts_max = 4;

    hl_suite_config suite{};
    std::string sections = "all";
    bool timing = false;
};

hl_search_limits limits_of(const Options& o) {
    return {o.max_nodes, o.time_budget, o.threads};
}

/// "random" picks up --seed; every other source is passed through.
std::string recipe_source(const Options& o) {
    if (o.recipe == "random")
        return "random:seed=" + std::to_string(o.seed.value_or(0));
    return o.recipe;
}

RecipePtr load_recipe(const Options& o) {
    hl_recipe* r = nullptr;
    check(hl_recipe_from_source(recipe_source(o).c_str(), o.n, &r));
    return RecipePtr(r);
}

GraphPtr materialize(const hl_recipe* r) {
    hl_graph* g = nullptr;
    check(hl_graph_materialize(r, &g));
    return GraphPtr(g);
}

std::int64_t extremal(std::uint64_t g) {
    std::int64_t e = 0;
    check(hl_extremal_edges(g, &e));
    return e;
}

/// g values selected by --g, --g-max or --g-all (1..count).
std::vector<std::uint64_t> g_range(const Options& o, std::uint64_t all_max) {
    if (o.g)
        return {*o.g};
    std::uint64_t top = 0;
    if (o.g_max)
        top = *o.g_max;
    else if (o.g_all)
        top = all_max;
    else
        throw Failure{"one of --g, --g-max or --g-all is required"};
    std::vector<std::uint64_t> gs;
    for (std::uint64_t g = 1; g <= top; ++g)
        gs.push_back(g);
    return gs;
}

hl_report_row row_of(const char* check, int n, std::uint64_t g, std::int64_t formula,
                     const char* status) {
    hl_report_row row{};
    row.check = check;
    row.n = n;
    row.g = g;
    row.formula_value = formula;
    row.status = status;
    return row;
}

void emit(const Options& o, const hl_report* report) {
    hl_format format;
    check(hl_parse_format(o.format.c_str(), &format));
    if (!o.out.empty()) {
        check(hl_report_save(report, format, o.out.c_str()));
        return;
    }
    char* text = nullptr;
    check(hl_report_render(report, format, &text));
    std::fputs(text, stdout);
    hl_string_free(text);
}

ReportPtr new_report() {
    hl_report* r = nullptr;
    check(hl_report_create(&r));
    return ReportPtr(r);
}

// --- commands ---------------------------------------------------------------

int cmd_gen(const Options& o) {
    const RecipePtr recipe = load_recipe(o);
    if (o.out.empty()) {
        char* text = nullptr;
        check(hl_recipe_to_json(recipe.get(), &text));
        std::fputs(text, stdout);
        hl_string_free(text);
    } else {
        check(hl_recipe_save(recipe.get(), o.out.c_str()));
    }
    if (!o.graph_out.empty()) {
        const GraphPtr graph = materialize(recipe.get());
        check(hl_graph_save(graph.get(), o.graph_out.c_str()));
    }
    return exit_pass;
}

int cmd_eg(const Options& o) {
    RecipePtr recipe;
    GraphPtr graph;
    std::uint64_t all_max = 4096;
    if (o.n >= 0) {
        recipe = load_recipe(o);
        graph = materialize(recipe.get());
        all_max = hl_graph_vertex_count(graph.get()) - 1;
    }
    const ReportPtr report = new_report();
    bool ok = true;
    for (std::uint64_t g : g_range(o, all_max)) {
        hl_report_row row = row_of("eg", o.n < 0 ? 0 : o.n, g, extremal(g), "pass");
        if (recipe) {
            std::vector<std::uint32_t> sel(g);
            std::size_t len = 0;
            check(hl_extremal_subgraph(recipe.get(), g, sel.data(), sel.size(), &len));
            std::int64_t induced = 0;
            check(hl_induced_edge_count(graph.get(), sel.data(), len, &induced));
            row.has_construction = 1;
            row.construction_value = induced;
            if (induced != row.formula_value) {
                row.status = "fail";
                ok = false;
            }
        }
        check(hl_report_add_row(report.get(), &row));
    }
    emit(o, report.get());
    return ok ? exit_pass : exit_fail;
}

hl_cut_mode mode_of(const Options& o) {
    if (o.mode == "permissive") {
        std::fprintf(stderr, "warning: permissive mode: results outside n >= 8, "
                             "g <= 2^ceil(n/2) are constructible cut sizes, not proven "
                             "component edge connectivities\n");
        return HL_MODE_PERMISSIVE;
    }
    return HL_MODE_STRICT;
}

int cmd_cut(const Options& o) {
    if (!o.g)
        throw Failure{"cut requires --g"};
    const hl_cut_mode mode = mode_of(o);
    const RecipePtr recipe = load_recipe(o);
    const int n = hl_recipe_dim(recipe.get());
    std::int64_t formula = 0;
    int proven = 0;
    check(hl_component_edge_connectivity(n, *o.g, mode, &formula, &proven));

    hl_edges* raw = nullptr;
    check(hl_build_component_cut(recipe.get(), *o.g, &raw));
    const EdgesPtr cut(raw);
    const GraphPtr graph = materialize(recipe.get());
    hl_cut_report rep{};
    check(hl_verify_cut(graph.get(), cut.get(), *o.g, &rep));
    if (!o.cut_out.empty())
        check(hl_edges_save_cut(cut.get(), n, *o.g, o.cut_out.c_str()));

    const bool ok = rep.matches_prediction && rep.cut_size == formula &&
                    rep.isolated_count == static_cast<std::int64_t>(*o.g);
    const std::string status = std::string(ok ? "pass" : "fail") + (proven ? "" : " unproven") +
                               " components=" + std::to_string(rep.component_count) +
                               " isolated=" + std::to_string(rep.isolated_count);
    hl_report_row row = row_of("cut", n, *o.g, formula, status.c_str());
    row.has_construction = 1;
    row.construction_value = rep.cut_size;
    const ReportPtr report = new_report();
    check(hl_report_add_row(report.get(), &row));
    emit(o, report.get());
    return ok ? exit_pass : exit_fail;
}

int cmd_verify(const Options& o) {
    GraphPtr graph;
    if (!o.graph_path.empty()) {
        hl_graph* g = nullptr;
        check(hl_graph_load(o.graph_path.c_str(), &g));
        graph.reset(g);
    } else {
        const RecipePtr recipe = load_recipe(o);
        graph = materialize(recipe.get());
    }
    if (o.cut_path.empty())
        throw Failure{"verify requires --cut"};
    hl_edges* raw = nullptr;
    check(hl_edges_load(o.cut_path.c_str(), &raw));
    const EdgesPtr cut(raw);
    const std::uint64_t g = o.g.value_or(0);
    hl_cut_report rep{};
    check(hl_verify_cut(graph.get(), cut.get(), g, &rep));

    const bool judged = o.g.has_value();
    const bool ok = !judged || rep.matches_prediction;
    const std::string status = std::string(judged ? (ok ? "pass " : "fail ") : "") +
                               "components=" + std::to_string(rep.component_count) +
                               " isolated=" + std::to_string(rep.isolated_count);
    hl_report_row row = row_of("verify", hl_graph_dim(graph.get()), g, rep.predicted_size,
                               status.c_str());
    row.has_construction = 1;
    row.construction_value = rep.cut_size;
    const ReportPtr report = new_report();
    check(hl_report_add_row(report.get(), &row));
    emit(o, report.get());
    return ok ? exit_pass : exit_fail;
}

int cmd_oracle_eg(const Options& o) {
    const RecipePtr recipe = load_recipe(o);
    const GraphPtr graph = materialize(recipe.get());
    const std::uint64_t count = hl_graph_vertex_count(graph.get());
    const hl_search_limits limits = limits_of(o);
    const ReportPtr report = new_report();
    bool ok = true, exhausted = false;
    const std::string check_name = "oracle-eg:" + recipe_source(o);
    std::vector<std::uint32_t> sel(count);
    for (std::uint64_t g : g_range(o, count)) {
        hl_search_result res{};
        check(hl_oracle_max_induced(graph.get(), g, &limits, &res, nullptr, 0));
        hl_report_row row = row_of(check_name.c_str(), hl_graph_dim(graph.get()), g, extremal(g), "");
        if (g < count) {
            std::size_t len = 0;
            check(hl_extremal_subgraph(recipe.get(), g, sel.data(), sel.size(), &len));
            std::int64_t induced = 0;
            check(hl_induced_edge_count(graph.get(), sel.data(), len, &induced));
            row.has_construction = 1;
            row.construction_value = induced;
        }
        row.has_oracle = res.found;
        row.oracle_value = res.value;
        if (!res.complete) {
            row.status = "incomplete";
            exhausted = true;
        } else if (res.value == row.formula_value &&
                   (!row.has_construction || row.construction_value == row.formula_value)) {
            row.status = "pass";
        } else {
            row.status = "fail";
            ok = false;
        }
        check(hl_report_add_row(report.get(), &row));
    }
    emit(o, report.get());
    if (!ok)
        return exit_fail;
    return exhausted ? exit_budget : exit_pass;
}

int cmd_oracle_clambda(const Options& o) {
    const RecipePtr recipe = load_recipe(o);
    const GraphPtr graph = materialize(recipe.get());
    const int n = hl_graph_dim(graph.get());
    const std::uint64_t count = hl_graph_vertex_count(graph.get());
    std::vector<std::uint64_t> gs;
    if (o.g) {
        gs.push_back(*o.g);
    } else {
        for (std::uint64_t parts = 2; parts <= o.parts_max && parts <= count; ++parts)
            gs.push_back(parts - 1);
    }
    const hl_search_limits limits = limits_of(o);
    const ReportPtr report = new_report();
    const std::string check_name = "oracle-clambda:" + recipe_source(o);
    bool ok = true, exhausted = false;
    std::vector<std::uint32_t> block_of(count);
    std::vector<std::string> statuses;
    statuses.reserve(gs.size());
    for (std::uint64_t g : gs) {
        std::int64_t formula = 0;
        int proven = 0;
        check(hl_component_edge_connectivity(n, g, HL_MODE_PERMISSIVE, &formula, &proven));
        hl_edges* raw = nullptr;
        check(hl_build_component_cut(recipe.get(), g, &raw));
        const EdgesPtr cut(raw);
        hl_search_result res{};
        check(hl_oracle_min_cut(graph.get(), g + 1, &limits, &res, block_of.data(),
                                block_of.size()));
        hl_report_row row = row_of(check_name.c_str(), n, g, formula, "");
        row.has_construction = 1;
        row.construction_value = static_cast<std::int64_t>(hl_edges_size(cut.get()));
        row.has_oracle = res.found;
        row.oracle_value = res.value;
        if (!res.complete) {
            statuses.push_back("incomplete");
            exhausted = true;
        } else if (res.value > formula || row.construction_value != formula) {
            statuses.push_back("fail");
            ok = false;
        } else if (res.value == formula) {
            statuses.push_back("equal");
        } else {
            statuses.push_back("gap=" + std::to_string(formula - res.value));
        }
        row.status = statuses.back().c_str();
        check(hl_report_add_row(report.get(), &row));
        if (!o.witness_out.empty() && res.complete && o.g)
            check(hl_partition_save(graph.get(), block_of.data(), block_of.size(),
                                    o.witness_out.c_str()));
    }
    emit(o, report.get());
    if (!ok)
        return exit_fail;
    return exhausted ? exit_budget : exit_pass;
}

int cmd_suite(Options o) {
    o.suite.limits = limits_of(o);
    o.suite.timing = o.timing ? 1 : 0;
    if (o.seed)
        o.suite.seed = *o.seed;
    if (o.g_max)
        o.suite.g_max = *o.g_max;
    int sections = 0;
    std::string rest = o.sections;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string part = rest.substr(0, comma);
        rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
        if (part == "all")
            sections |= HL_SUITE_ALL;
        else if (part == "lemmas")
            sections |= HL_SUITE_LEMMAS;
        else if (part == "construction")
            sections |= HL_SUITE_CONSTRUCTION;
        else if (part == "oracles")
            sections |= HL_SUITE_ORACLES;
        else
            throw Failure{"unknown suite section '" + part + "'"};
    }
    o.suite.sections = sections;

    hl_suite_result* raw = nullptr;
    check(hl_suite_run(&o.suite, &raw));
    const SuitePtr result(raw);
    emit(o, hl_suite_result_report(result.get()));
    const std::size_t violations = hl_suite_result_violation_count(result.get());
    for (std::size_t i = 0; i < violations; ++i)
        std::fprintf(stderr, "FAIL %s\n", hl_suite_result_violation(result.get(), i));
    if (violations > 0)
        return exit_fail;
    if (hl_suite_result_budget_exhausted(result.get())) {
        std::fprintf(stderr, "budget exhausted before all oracle checks completed\n");
        return exit_budget;
    }
    return exit_pass;
}

// --- option wiring ------------------------------------------------------------

void add_recipe_options(CLI::App* app, Options& o) {
    app->add_option("--n", o.n, "dimension")->check(CLI::Range(0, 62));
    app->add_option("--recipe", o.recipe,
                    "hypercube, g84, random (with --seed), random:seed=S or file:PATH");
    app->add_option("--seed", o.seed, "seed for --recipe random");
}

void add_output_options(CLI::App* app, Options& o) {
    app->add_option("--format", o.format, "report format")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    app->add_option("--out", o.out, "write the report to PATH instead of stdout");
}

void add_range_options(CLI::App* app, Options& o) {
    auto* g = app->add_option("--g", o.g, "single g");
    auto* g_max = app->add_option("--g-max", o.g_max, "all g in 1..G");
    auto* g_all = app->add_flag("--g-all", o.g_all, "every g the graph allows");
    g->excludes(g_max)->excludes(g_all);
    g_max->excludes(g_all);
}

void add_limit_options(CLI::App* app, Options& o) {
    app->add_option("--time-budget", o.time_budget, "wall-clock budget in seconds (0 = none)")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--max-nodes", o.max_nodes, "search-node budget (0 = none)");
    app->add_option("--threads", o.threads, "oracle worker threads");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hypercube-like network experiments"};
    app.require_subcommand(1);
    Options o;
    hl_suite_config_default(&o.suite);

    auto* gen = app.add_subcommand("gen", "write a recipe (and optionally its edge list)");
    add_recipe_options(gen, o);
    gen->add_option("--out", o.out, "recipe JSON path (default stdout)");
    gen->add_option("--graph", o.graph_out, "also write the edge list to PATH");

    auto* eg = app.add_subcommand("eg", "tabulate e_g; with --n also run the construction");
    add_recipe_options(eg, o);
    add_range_options(eg, o);
    add_output_options(eg, o);

    auto* cut = app.add_subcommand("cut", "build and check a (g+1)-component edge cut");
    add_recipe_options(cut, o);
    cut->add_option("--g", o.g, "number of vertices to isolate")->required();
    cut->add_option("--mode", o.mode, "strict or permissive")
        ->check(CLI::IsMember({"strict", "permissive"}));
    cut->add_option("--cut-out", o.cut_out, "write the cut edges to PATH");
    add_output_options(cut, o);

    auto* verify = app.add_subcommand("verify", "count components after removing an edge set");
    add_recipe_options(verify, o);
    verify->add_option("--graph", o.graph_path, "edge-list file (instead of --recipe)");
    verify->add_option("--cut", o.cut_path, "edge set to remove")->required();
    verify->add_option("--g", o.g, "expected number of isolated vertices");
    add_output_options(verify, o);

    auto* oracle_eg = app.add_subcommand("oracle-eg", "brute-force e_g against the formula");
    add_recipe_options(oracle_eg, o);
    add_range_options(oracle_eg, o);
    add_output_options(oracle_eg, o);
    add_limit_options(oracle_eg, o);

    auto* oracle_cl = app.add_subcommand("oracle-clambda",
                                         "brute-force minimum component cuts against n*g - e_g");
    add_recipe_options(oracle_cl, o);
    oracle_cl->add_option("--g", o.g, "single g (parts = g + 1)");
    oracle_cl->add_option("--parts-max", o.parts_max, "largest part count (default 4)");
    oracle_cl->add_option("--witness-out", o.witness_out, "write the optimal partition (with --g)");
    add_output_options(oracle_cl, o);
    add_limit_options(oracle_cl, o);

    auto* suite = app.add_subcommand("suite", "run the property suite");
    suite->add_option("--g-max", o.g_max, "g bound for the pure-formula checks");
    suite->add_option("--n-max", o.suite.n_max, "largest n for the slack check");
    suite->add_option("--monotone-n-max", o.suite.monotone_n_max,
                      "largest n for the monotonicity check");
    suite->add_option("--increment-max", o.suite.increment_max,
                      "largest i for the increment identity");
    suite->add_option("--construct-n-min", o.suite.construct_n_min);
    suite->add_option("--construct-n-max", o.suite.construct_n_max);
    suite->add_option("--random-recipes", o.suite.random_recipes,
                      "seeded recipes per n besides the hypercube");
    suite->add_option("--oracle-n-max", o.suite.oracle_n_max, "0 disables the oracle section");
    suite->add_option("--seed", o.seed, "first recipe seed");
    suite->add_option("--sections", o.sections, "comma list of lemmas, construction, oracles, all");
    suite->add_flag("--timing", o.timing, "fill elapsed_ms (reports stop being reproducible)");
    add_output_options(suite, o);
    add_limit_options(suite, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return e.get_exit_code() == 0 ? code : exit_usage;
    }

    try {
        if (*gen)
            return cmd_gen(o);
        if (*eg)
            return cmd_eg(o);
        if (*cut)
            return cmd_cut(o);
        if (*verify)
            return cmd_verify(o);
        if (*oracle_eg)
            return cmd_oracle_eg(o);
        if (*oracle_cl)
            return cmd_oracle_clambda(o);
        if (*suite)
            return cmd_suite(o);
    } catch (const Failure& f) {
        std::fprintf(stderr, "error: %s\n", f.message.c_str());
        return exit_usage;
    }
    return exit_usage;
}
