#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "hlnet/graph.hpp"
#include "hlnet/recipe.hpp"
#include "test_support.hpp"

using namespace hlnet;

TEST_CASE("compose of two leaves is K2") {
    const Recipe k2 = Recipe::compose(Recipe::leaf(), Recipe::leaf(), MatchingPerm({0}));
    CHECK(k2.dim() == 1);
    const Graph g = materialize(k2);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 1));
}

TEST_CASE("compose rejects bad input") {
    const Recipe c4 = hypercube(2);
    CHECK_THROWS_AS(Recipe::compose(c4, c4, MatchingPerm({0, 1, 2})), Error);
    CHECK_THROWS_AS(Recipe::compose(c4, hypercube(1), MatchingPerm::identity(4)), Error);
    CHECK_THROWS_AS(MatchingPerm({0, 0, 1, 2}), Error);
    CHECK_THROWS_AS(MatchingPerm({0, 4, 1, 2}), Error);
}

TEST_CASE("non-permutation message names the duplicated image") {
    try {
        MatchingPerm({0, 0, 1, 2});
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("image 0") != std::string::npos);
    }
}

TEST_CASE("C4 joined by identity is Q3 (canonical form)") {
    const Recipe q3 = Recipe::compose(hypercube(2), hypercube(2), MatchingPerm::identity(4));
    // Reference cube: u ~ v iff labels differ in one bit.
    std::vector<Edge> cube;
    for (VertexId u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b)
            if (u < (u ^ (1u << b)))
                cube.emplace_back(u, u ^ (1u << b));
    const Graph reference = Graph::from_edges(3, cube);
    CHECK(testing::brute_canonical_form(materialize(q3)) ==
          testing::brute_canonical_form(reference));
    CHECK(q3 == hypercube(3));
}

TEST_CASE("hypercube adjacency is the single-bit rule") {
    for (int n = 0; n <= 6; ++n) {
        const Graph g = materialize(hypercube(n));
        CHECK(g.vertex_count() == (std::size_t{1} << n));
        CHECK(g.edge_count() == (std::size_t{1} << n) * n / 2);
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                CHECK(g.has_edge(u, v) == (std::popcount(u ^ v) == 1));
    }
}

TEST_CASE("hypercube small cases") {
    const Graph k1 = materialize(hypercube(0));
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edge_count() == 0);

    const Graph c4 = materialize(hypercube(2));
    // Cycle 0-1-3-2-0.
    CHECK(c4.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});

    const Graph q3 = materialize(hypercube(3));
    CHECK(q3.edge_count() == 12);
    CHECK(testing::is_bipartite(q3));
}

TEST_CASE("dimension guard") {
    CHECK_THROWS_AS(hypercube(21), Error);
    CHECK_THROWS_AS(hypercube(-1), Error);
    set_max_dimension(22);
    CHECK_NOTHROW(hypercube(21));
    set_max_dimension(20);
    try {
        random_hl(25, 1);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::limit);
    }
}

TEST_CASE("g84 is 3-regular, non-bipartite and not Q3") {
    const Graph g = materialize(g84());
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 12);
    CHECK(g.is_connected());
    CHECK_FALSE(testing::is_bipartite(g));
    CHECK(testing::brute_canonical_form(g) !=
          testing::brute_canonical_form(materialize(hypercube(3))));
}

TEST_CASE("every dim-3 recipe is Q3 or G(8,4)") {
    const auto q3 = testing::brute_canonical_form(materialize(hypercube(3)));
    const auto g = testing::brute_canonical_form(materialize(g84()));
    std::vector<VertexId> perm{0, 1, 2, 3};
    int q3_count = 0, g84_count = 0;
    do {
        for (const auto& half : {hypercube(2), random_hl(2, 5)}) {
            const auto form = testing::brute_canonical_form(
                materialize(Recipe::compose(hypercube(2), half, MatchingPerm(perm))));
            CHECK((form == q3 || form == g));
            (form == q3 ? q3_count : g84_count)++;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(q3_count > 0);
    CHECK(g84_count > 0);
}

TEST_CASE("split inverts compose") {
    const Recipe l = random_hl(3, 11), r = random_hl(3, 12);
    const MatchingPerm m({7, 6, 5, 4, 3, 2, 1, 0});
    const Recipe joined = Recipe::compose(l, r, m);
    auto [sl, sr, sm] = joined.split();
    CHECK(sl == l);
    CHECK(sr == r);
    CHECK(sm == m);
    CHECK(Recipe::compose(sl, sr, sm) == joined);

    auto [hl, hr, hm] = hypercube(3).split();
    CHECK(hl == hypercube(2));
    CHECK(hr == hypercube(2));
    CHECK(hm == MatchingPerm::identity(4));

    CHECK_THROWS_AS(Recipe::leaf().split(), Error);
}

TEST_CASE("left half of a materialized node is the left recipe") {
    const Recipe l = random_hl(4, 3), r = random_hl(4, 4);
    const Recipe joined = Recipe::compose(l, r, MatchingPerm::identity(16));
    const Graph big = materialize(joined);
    const Graph left = materialize(l);
    const Graph right = materialize(r);
    for (VertexId u = 0; u < 16; ++u)
        for (VertexId v = 0; v < 16; ++v) {
            CHECK(big.has_edge(u, v) == left.has_edge(u, v));
            CHECK(big.has_edge(u + 16, v + 16) == right.has_edge(u, v));
        }
}

TEST_CASE("random_hl is deterministic and seed-sensitive") {
    CHECK(random_hl(6, 42) == random_hl(6, 42));
    CHECK(recipe_to_json(random_hl(6, 42)) == recipe_to_json(random_hl(6, 42)));
    CHECK_FALSE(random_hl(6, 42) == random_hl(6, 43));
    CHECK(materialize(random_hl(7, 9)).edges() == materialize(random_hl(7, 9)).edges());
}

TEST_CASE("random_hl frozen stream") {
    // Value from an independent splitmix64 + Fisher-Yates reimplementation.
    const Recipe r = random_hl(3, 1);
    const auto m = r.matching().values();
    const std::vector<VertexId> got(m.begin(), m.end());
    CHECK(got == std::vector<VertexId>{0, 2, 3, 1});
}

TEST_CASE("materialized recipes satisfy the HL invariants") {
    for (int n = 0; n <= 10; ++n) {
        for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
            const Graph g = materialize(random_hl(n, seed));
            REQUIRE(g.vertex_count() == (std::size_t{1} << n));
            CHECK(g.edge_count() * 2 == g.vertex_count() * n);
            CHECK(g.is_connected());
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                const auto nb = g.neighbors(v);
                std::vector<VertexId> sorted(nb.begin(), nb.end());
                std::sort(sorted.begin(), sorted.end());
                CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
                for (VertexId w : nb) {
                    CHECK(w != v);
                    CHECK(g.has_edge(w, v));
                }
            }
        }
    }
}

TEST_CASE("large random recipe") {
    const Graph g = materialize(random_hl(10, 7));
    CHECK(g.vertex_count() == 1024);
    CHECK(g.edge_count() == 5120);
    CHECK(g.is_connected());
    CHECK(g.edges().size() == 5120);
}

TEST_CASE("recipe JSON round trip") {
    for (const Recipe& r : {hypercube(4), random_hl(5, 3), g84(), Recipe::leaf()}) {
        CHECK(recipe_from_json(recipe_to_json(r)) == r);
    }
    CHECK(recipe_to_json(Recipe::leaf()) == "{\"dim\":0,\"leaf\":true}\n");
    CHECK(recipe_to_json(hypercube(1)) ==
          "{\"dim\":1,\"node\":{\"left\":{\"dim\":0,\"leaf\":true},"
          "\"right\":{\"dim\":0,\"leaf\":true},\"matching\":[0]}}\n");

    const auto path = std::filesystem::temp_directory_path() / "hlnet_recipe_roundtrip.json";
    save_recipe(hypercube(4), path);
    CHECK(load_recipe(path) == hypercube(4));
    CHECK(recipe_from_source("file:" + path.string(), 4) == hypercube(4));
    CHECK_THROWS_AS(recipe_from_source("file:" + path.string(), 5), Error);
    std::filesystem::remove(path);
}

TEST_CASE("recipe JSON schema violations") {
    const std::string leaf = R"({"dim":0,"leaf":true})";
    const std::string c2 = R"({"dim":1,"node":{"left":)" + leaf + R"(,"right":)" + leaf +
                           R"(,"matching":[0]}})";
    auto rejects_with = [](const std::string& text, const std::string& fragment) {
        try {
            recipe_from_json(text);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::parse);
            INFO(e.what());
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
            return;
        }
        FAIL("accepted: " << text);
    };
    rejects_with(R"({"dim":2,"node":{"left":)" + c2 + R"(,"right":)" + c2 +
                     R"(,"matching":[0,0]}})",
                 "/node/matching");
    rejects_with(R"({"dim":3,"node":{"left":{"dim":2,"node":{"left":)" + c2 + R"(,"right":)" +
                     c2 + R"(,"matching":[0,1]}},"right":{"dim":2,"node":{"left":)" + c2 +
                     R"(,"right":)" + c2 + R"(,"matching":[0,0,1,2]}},"matching":[0,1,2,3]}})",
                 "");
    // Halves of unequal depth.
    rejects_with(R"({"dim":2,"node":{"left":)" + c2 + R"(,"right":)" + leaf +
                     R"(,"matching":[0,1]}})",
                 "/node");
    rejects_with(R"({"dim":1,"leaf":true})", "leaf");
    rejects_with(R"({"dim":1,"node":{"left":)" + leaf + R"(,"right":)" + leaf +
                     R"(,"matching":[1]}})",
                 "/node/matching/0");
    rejects_with("{not json", "JSON");
    rejects_with(R"({"leaf":true})", "/dim");
}

TEST_CASE("recipe sources") {
    CHECK(recipe_from_source("hypercube", 5) == hypercube(5));
    CHECK(recipe_from_source("g84", -1) == g84());
    CHECK(recipe_from_source("random:seed=7", 8) == random_hl(8, 7));
    CHECK_THROWS_AS(recipe_from_source("g84", 4), Error);
    CHECK_THROWS_AS(recipe_from_source("random:seed=x", 4), Error);
    CHECK_THROWS_AS(recipe_from_source("crossed", 4), Error);
}
