// Exercises the shared library through hlnet.h only.
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "hlnet/hlnet.h"

TEST_CASE("version and errors") {
    CHECK(std::string(hl_version()) == "0.1.0");
    hl_recipe* r = nullptr;
    CHECK(hl_recipe_hypercube(-1, &r) == HL_ERROR_INVALID_ARGUMENT);
    CHECK(r == nullptr);
    CHECK(std::strlen(hl_last_error()) > 0);
    CHECK(hl_recipe_hypercube(3, nullptr) == HL_ERROR_INVALID_ARGUMENT);
    hl_recipe_free(nullptr);
    hl_graph_free(nullptr);
}

TEST_CASE("recipes and graphs") {
    hl_recipe *c4 = nullptr, *q3 = nullptr, *joined = nullptr;
    REQUIRE(hl_recipe_hypercube(2, &c4) == HL_OK);
    REQUIRE(hl_recipe_hypercube(3, &q3) == HL_OK);
    const uint32_t identity[4] = {0, 1, 2, 3};
    REQUIRE(hl_recipe_compose(c4, c4, identity, 4, &joined) == HL_OK);
    CHECK(hl_recipe_dim(joined) == 3);
    CHECK(hl_recipe_equal(joined, q3) == 1);
    const uint32_t bad[4] = {0, 0, 1, 2};
    hl_recipe* none = nullptr;
    CHECK(hl_recipe_compose(c4, c4, bad, 4, &none) == HL_ERROR_INVALID_ARGUMENT);
    CHECK(std::string(hl_last_error()).find("image 0") != std::string::npos);

    hl_recipe *left = nullptr, *right = nullptr;
    uint32_t m[4];
    size_t len = 0;
    REQUIRE(hl_recipe_split(q3, &left, &right, m, 4, &len) == HL_OK);
    CHECK(len == 4);
    CHECK(hl_recipe_equal(left, c4) == 1);
    CHECK(hl_recipe_split(q3, nullptr, nullptr, m, 2, &len) == HL_ERROR_INVALID_ARGUMENT);

    hl_graph* g = nullptr;
    REQUIRE(hl_graph_materialize(q3, &g) == HL_OK);
    CHECK(hl_graph_dim(g) == 3);
    CHECK(hl_graph_vertex_count(g) == 8);
    CHECK(hl_graph_edge_count(g) == 12);
    CHECK(hl_graph_is_connected(g) == 1);
    uint32_t nb[3];
    REQUIRE(hl_graph_neighbors(g, 0, nb, 3, &len) == HL_OK);
    CHECK(len == 3);
    CHECK(nb[0] == 1);
    CHECK(nb[1] == 2);
    CHECK(nb[2] == 4);

    const uint32_t face[4] = {0, 1, 2, 3};
    int64_t induced = 0;
    REQUIRE(hl_induced_edge_count(g, face, 4, &induced) == HL_OK);
    CHECK(induced == 4);
    hl_edges* boundary = nullptr;
    REQUIRE(hl_boundary_edges(g, face, 4, &boundary) == HL_OK);
    CHECK(hl_edges_size(boundary) == 4);
    uint32_t u = 0, v = 0;
    REQUIRE(hl_edges_at(boundary, 0, &u, &v) == HL_OK);
    CHECK(u == 0);
    CHECK(v == 4);
    CHECK(hl_edges_at(boundary, 4, &u, &v) == HL_ERROR_INVALID_ARGUMENT);

    hl_edges_free(boundary);
    hl_graph_free(g);
    hl_recipe_free(left);
    hl_recipe_free(right);
    hl_recipe_free(joined);
    hl_recipe_free(q3);
    hl_recipe_free(c4);
}

TEST_CASE("recipe JSON through the C API") {
    hl_recipe *r = nullptr, *back = nullptr;
    REQUIRE(hl_recipe_random(5, 9, &r) == HL_OK);
    char* text = nullptr;
    REQUIRE(hl_recipe_to_json(r, &text) == HL_OK);
    REQUIRE(hl_recipe_from_json(text, &back) == HL_OK);
    CHECK(hl_recipe_equal(r, back) == 1);
    hl_string_free(text);
    hl_recipe* bad = nullptr;
    CHECK(hl_recipe_from_json("{\"dim\":1,\"leaf\":true}", &bad) == HL_ERROR_PARSE);

    const auto path = (std::filesystem::temp_directory_path() / "hlnet_capi_recipe.json").string();
    REQUIRE(hl_recipe_save(r, path.c_str()) == HL_OK);
    hl_recipe* loaded = nullptr;
    REQUIRE(hl_recipe_from_source(("file:" + path).c_str(), 5, &loaded) == HL_OK);
    CHECK(hl_recipe_equal(r, loaded) == 1);
    std::filesystem::remove(path);
    CHECK(hl_recipe_load(path.c_str(), &bad) == HL_ERROR_IO);

    hl_recipe_free(loaded);
    hl_recipe_free(back);
    hl_recipe_free(r);
}

TEST_CASE("formulas through the C API") {
    int exps[64];
    size_t len = 0;
    REQUIRE(hl_decompose(13, exps, 64, &len) == HL_OK);
    CHECK(len == 3);
    CHECK(exps[0] == 3);
    CHECK(exps[2] == 0);
    CHECK(hl_decompose(0, exps, 64, &len) == HL_ERROR_DOMAIN);

    int64_t e = 0;
    REQUIRE(hl_extremal_edges(13, &e) == HL_OK);
    CHECK(e == 22);
    CHECK(hl_extremal_edges(UINT64_MAX, &e) == HL_ERROR_OVERFLOW);
    REQUIRE(hl_extremal_increment(7, &e) == HL_OK);
    CHECK(e == 3);

    int proven = -1;
    REQUIRE(hl_component_edge_connectivity(8, 16, HL_MODE_STRICT, &e, &proven) == HL_OK);
    CHECK(e == 96);
    CHECK(proven == 1);
    CHECK(hl_component_edge_connectivity(8, 17, HL_MODE_STRICT, &e, &proven) == HL_ERROR_DOMAIN);
    REQUIRE(hl_component_edge_connectivity(8, 17, HL_MODE_PERMISSIVE, &e, &proven) == HL_OK);
    CHECK(proven == 0);
    CHECK(hl_proven_g_limit(9) == 32);

    int holds = 0;
    REQUIRE(hl_check_merge(3, 5, &holds) == HL_OK);
    CHECK(holds == 1);
    CHECK(hl_check_slack(4, 5, &holds) == HL_ERROR_DOMAIN);
}

TEST_CASE("constructions and oracles through the C API") {
    hl_recipe* r = nullptr;
    REQUIRE(hl_recipe_hypercube(8, &r) == HL_OK);
    hl_graph* g = nullptr;
    REQUIRE(hl_graph_materialize(r, &g) == HL_OK);

    std::vector<uint32_t> sel(5);
    size_t len = 0;
    REQUIRE(hl_extremal_subgraph(r, 5, sel.data(), sel.size(), &len) == HL_OK);
    CHECK(len == 5);
    CHECK(sel[4] == 4);

    hl_edges* cut = nullptr;
    REQUIRE(hl_build_component_cut(r, 5, &cut) == HL_OK);
    CHECK(hl_edges_size(cut) == 35);
    hl_cut_report rep{};
    REQUIRE(hl_verify_cut(g, cut, 5, &rep) == HL_OK);
    CHECK(rep.cut_size == 35);
    CHECK(rep.isolated_count == 5);
    CHECK(rep.matches_prediction == 1);

    size_t comps = 0;
    std::vector<uint32_t> comp_of(256);
    REQUIRE(hl_components_after(g, cut, &comps, comp_of.data(), comp_of.size()) == HL_OK);
    CHECK(comps == static_cast<size_t>(rep.component_count));
    CHECK(comp_of[0] == 0);

    hl_search_result res{};
    CHECK(hl_oracle_max_induced(g, 4, nullptr, &res, nullptr, 0) == HL_ERROR_LIMIT);

    hl_recipe* q3r = nullptr;
    REQUIRE(hl_recipe_hypercube(3, &q3r) == HL_OK);
    hl_graph* q3 = nullptr;
    REQUIRE(hl_graph_materialize(q3r, &q3) == HL_OK);
    uint32_t witness[4];
    REQUIRE(hl_oracle_max_induced(q3, 4, nullptr, &res, witness, 4) == HL_OK);
    CHECK(res.found == 1);
    CHECK(res.complete == 1);
    CHECK(res.value == 4);
    CHECK(witness[3] == 3);

    uint32_t block_of[8];
    hl_search_limits limits{0, 0.0, 2};
    REQUIRE(hl_oracle_min_cut(q3, 3, &limits, &res, block_of, 8) == HL_OK);
    CHECK(res.value == 5);
    CHECK(res.complete == 1);

    const auto path = (std::filesystem::temp_directory_path() / "hlnet_capi_partition.txt").string();
    REQUIRE(hl_partition_save(q3, block_of, 8, path.c_str()) == HL_OK);
    std::FILE* f = std::fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    char line[64] = {};
    REQUIRE(std::fgets(line, sizeof line, f) != nullptr);
    std::fclose(f);
    CHECK(std::string(line) == "# partition blocks=3 cross=5\n");
    std::filesystem::remove(path);

    hl_recipe* g84r = nullptr;
    REQUIRE(hl_recipe_g84(&g84r) == HL_OK);
    hl_graph* g84 = nullptr;
    REQUIRE(hl_graph_materialize(g84r, &g84) == HL_OK);
    int iso = -1;
    REQUIRE(hl_isomorphic_small(q3, g84, &iso) == HL_OK);
    CHECK(iso == 0);
    REQUIRE(hl_isomorphic_small(q3, q3, &iso) == HL_OK);
    CHECK(iso == 1);

    hl_graph_free(g84);
    hl_recipe_free(g84r);
    hl_graph_free(q3);
    hl_recipe_free(q3r);
    hl_edges_free(cut);
    hl_graph_free(g);
    hl_recipe_free(r);
}

TEST_CASE("reports through the C API") {
    hl_report* rep = nullptr;
    REQUIRE(hl_report_create(&rep) == HL_OK);
    hl_report_row row{};
    row.check = "eg";
    row.n = 8;
    row.g = 5;
    row.formula_value = 35;
    row.has_construction = 1;
    row.construction_value = 35;
    row.status = "pass";
    REQUIRE(hl_report_add_row(rep, &row) == HL_OK);
    CHECK(hl_report_row_count(rep) == 1);
    hl_report_row back{};
    REQUIRE(hl_report_get_row(rep, 0, &back) == HL_OK);
    CHECK(std::string(back.check) == "eg");
    CHECK(back.has_oracle == 0);

    char* csv = nullptr;
    REQUIRE(hl_report_render(rep, HL_FORMAT_CSV, &csv) == HL_OK);
    CHECK(std::string(csv) ==
          "check,n,g,formula_value,construction_value,oracle_value,status,elapsed_ms\r\n"
          "eg,8,5,35,35,,pass,0\r\n");
    hl_string_free(csv);

    hl_format fmt;
    CHECK(hl_parse_format("json", &fmt) == HL_OK);
    CHECK(fmt == HL_FORMAT_JSON);
    CHECK(hl_parse_format("yaml", &fmt) == HL_ERROR_INVALID_ARGUMENT);
    hl_report_free(rep);
}

TEST_CASE("suite through the C API") {
    hl_suite_config cfg;
    hl_suite_config_default(&cfg);
    CHECK(cfg.g_max == 4096);
    CHECK(cfg.sections == HL_SUITE_ALL);
    cfg.g_max = 128;
    cfg.increment_max = 256;
    cfg.n_max = 8;
    cfg.monotone_n_max = 16;
    cfg.construct_n_max = 6;
    cfg.random_recipes = 1;
    cfg.oracle_n_max = 3;
    cfg.sections = HL_SUITE_LEMMAS | HL_SUITE_ORACLES;
    hl_suite_result* res = nullptr;
    REQUIRE(hl_suite_run(&cfg, &res) == HL_OK);
    CHECK(hl_suite_result_violation_count(res) == 0);
    CHECK(hl_suite_result_budget_exhausted(res) == 0);
    CHECK(hl_report_row_count(hl_suite_result_report(res)) > 0);
    CHECK(hl_suite_result_violation(res, 0) == nullptr);
    hl_suite_result_free(res);
}
