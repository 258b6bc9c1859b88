#include <doctest.h>

#include "hlnet/extremal.hpp"
#include "hlnet/ms_construction.hpp"
#include "test_support.hpp"

using namespace hlnet;

TEST_CASE("extremal subgraph small examples") {
    const MsTrace t = extremal_subgraph(hypercube(3), 3);
    CHECK(t.selected == VertexSet{0, 1, 2});
    REQUIRE(t.blocks.size() == 2);
    CHECK(t.blocks[0].path == "LL");
    CHECK(t.blocks[0].dim == 1);
    CHECK(t.blocks[0].vertices == VertexSet{0, 1});
    CHECK(t.blocks[1].path == "LRL");
    CHECK(t.blocks[1].dim == 0);
    CHECK(t.blocks[1].vertices == VertexSet{2});

    const MsTrace half = extremal_subgraph(hypercube(4), 8);
    REQUIRE(half.blocks.size() == 1);
    CHECK(half.blocks[0].path == "L");
    CHECK(half.selected.size() == 8);

    CHECK_THROWS_AS(extremal_subgraph(hypercube(3), 0), Error);
    CHECK_THROWS_AS(extremal_subgraph(hypercube(3), 8), Error);
}

TEST_CASE("extremal subgraph induces e_g edges on every recipe") {
    for (int n = 1; n <= 9; ++n) {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            const Recipe r = seed == 0 ? hypercube(n) : random_hl(n, seed);
            const Graph graph = materialize(r);
            for (std::uint64_t g = 1; g < graph.vertex_count(); ++g) {
                const MsTrace t = extremal_subgraph(r, g);
                CHECK(t.selected.size() == g);
                CHECK(induced_edge_count(graph, t.selected) == extremal_edges(g));
            }
        }
    }
}

TEST_CASE("trace blocks are disjoint subcubes joined by full matchings") {
    const Recipe r = random_hl(8, 21);
    const Graph graph = materialize(r);
    for (std::uint64_t g : {1u, 7u, 13u, 100u, 255u}) {
        const MsTrace t = extremal_subgraph(r, g);
        const auto exps = decompose(g).exponents;
        REQUIRE(t.blocks.size() == exps.size());
        std::size_t total = 0;
        for (std::size_t i = 0; i < t.blocks.size(); ++i) {
            const MsBlock& b = t.blocks[i];
            CHECK(b.dim == exps[i]);
            CHECK(b.vertices.size() == (std::size_t{1} << b.dim));
            CHECK(induced_edge_count(graph, b.vertices) ==
                  static_cast<std::int64_t>(b.dim) * (std::int64_t{1} << b.dim) / 2);
            total += b.vertices.size();
            // Every later, smaller block is reached by one edge per vertex.
            for (std::size_t j = i + 1; j < t.blocks.size(); ++j) {
                std::vector<VertexId> both(b.vertices.begin(), b.vertices.end());
                both.insert(both.end(), t.blocks[j].vertices.begin(), t.blocks[j].vertices.end());
                const std::int64_t cross = induced_edge_count(graph, VertexSet(both)) -
                                           induced_edge_count(graph, b.vertices) -
                                           induced_edge_count(graph, t.blocks[j].vertices);
                CHECK(cross == (std::int64_t{1} << t.blocks[j].dim));
            }
        }
        CHECK(total == g);
    }
}

TEST_CASE("component cut sizes") {
    CHECK(build_component_cut(hypercube(8), 16).size() == 96);
    CHECK(build_component_cut(hypercube(8), 5).size() == 35);
    CHECK(build_component_cut(random_hl(8, 3), 16).size() == 96);
}

TEST_CASE("component cut isolates exactly g vertices") {
    for (int n = 8; n <= 10; ++n) {
        const Recipe r = random_hl(n, static_cast<std::uint64_t>(n));
        const Graph graph = materialize(r);
        for (std::uint64_t g : {1u, 2u, 3u, 7u, 8u, 9u, 16u}) {
            const EdgeSet cut = build_component_cut(r, g);
            const CutReport rep = verify_cut(graph, cut, g);
            CHECK(rep.cut_size == n * static_cast<std::int64_t>(g) - extremal_edges(g));
            CHECK(rep.isolated_count == static_cast<std::int64_t>(g));
            CHECK(rep.component_count >= static_cast<std::int64_t>(g) + 1);
            CHECK(rep.component_count == testing::brute_component_count(graph, cut));
            CHECK(rep.matches_prediction);
        }
    }
}

TEST_CASE("verify_cut examples") {
    const Graph q3 = materialize(hypercube(3));
    const CutReport none = verify_cut(q3, EdgeSet{}, 0);
    CHECK(none.component_count == 1);
    CHECK(none.cut_size == 0);
    CHECK(none.matches_prediction);

    const CutReport one = verify_cut(q3, EdgeSet{{0, 1}, {0, 2}, {0, 4}}, 1);
    CHECK(one.component_count == 2);
    CHECK(one.isolated_count == 1);
    CHECK(one.predicted_size == 3);
    CHECK(one.matches_prediction);

    // Right size, but not a separating set.
    const CutReport wrong = verify_cut(q3, EdgeSet{{0, 1}, {2, 3}, {4, 5}}, 1);
    CHECK(wrong.component_count == 1);
    CHECK_FALSE(wrong.matches_prediction);

    CHECK_THROWS_AS(verify_cut(q3, EdgeSet{{0, 3}}, 1), Error);
    CHECK_THROWS_AS(verify_cut(q3, EdgeSet{}, 8), Error);
}

TEST_CASE("construction is deterministic") {
    const Recipe r = random_hl(9, 4);
    CHECK(build_component_cut(r, 27) == build_component_cut(r, 27));
    CHECK(extremal_subgraph(r, 27).selected == extremal_subgraph(r, 27).selected);
}
