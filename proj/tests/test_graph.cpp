#include <doctest.h>

#include <algorithm>
#include <random>

#include "pegging/corpus.hpp"
#include "pegging/graph.hpp"

using namespace peg;

namespace {

// All-pairs distances by Floyd-Warshall; independent of the BFS code.
std::vector<std::vector<std::size_t>> floyd(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const std::size_t inf = n + 1;
    std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
    for (VertexId v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (VertexId w : g.neighbors(v)) d[v][w] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

std::size_t oracle_diameter(const Graph& g) {
    std::size_t best = 0;
    for (const auto& row : floyd(g))
        for (std::size_t x : row) best = std::max(best, x);
    return best;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("family sizes") {
    const Graph ary = build_family(ArySpec{2, 3}).graph;
    CHECK(ary.vertex_count() == 15);
    CHECK(ary.edge_count() == 14);
    CHECK(leaves(ary).size() == 8);
    CHECK(build_family(ArySpec{1, 4}).graph.vertex_count() == 5);
    CHECK(build_family(ArySpec{3, 0}).graph.vertex_count() == 1);
    CHECK(ary_vertex_count(3, 2) == 13);
    CHECK(ary_vertex_count(32, 6) == 1108378657);
    CHECK_FALSE(ary_vertex_count(1000, 10).has_value());

    const Graph star = build_family(StarSpec{5}).graph;
    CHECK(star.vertex_count() == 5);
    CHECK(leaves(star).size() == 4);
    CHECK(diameter_and_longest_path(star).diameter == 2);

    const Graph cat = build_family(CaterpillarSpec{{1, 0, 2, 1}}).graph;
    CHECK(cat.vertex_count() == 8);
    CHECK(diameter_and_longest_path(cat).diameter == 5);
    CHECK(oracle_diameter(cat) == 5);
}

TEST_CASE("every generated family is a tree") {
    const std::vector<FamilySpec> specs = {PathSpec{1}, PathSpec{9}, StarSpec{2}, StarSpec{7}, ArySpec{2, 5}, ArySpec{4, 3},
                                           CaterpillarSpec{{0}}, CaterpillarSpec{{3, 0, 0, 2}}, LobsterSpec{{{1, 2}, {0}, {3}}},
                                           LobsterSpec{{{}, {}}}};
    for (const auto& s : specs) {
        const Graph g = build_family(s).graph;
        CHECK(g.is_tree());
        CHECK(g.edge_count() + 1 == g.vertex_count());
        CHECK(g.family_tag() == to_dsl(s));
    }
}

TEST_CASE("ary levels and leaves") {
    const Family f = build_family(ArySpec{3, 3});
    REQUIRE(f.rooted.has_value());
    const auto dist = distances_from(f.graph, 0);
    for (VertexId v = 0; v < f.graph.vertex_count(); ++v) CHECK(f.rooted->level[v] == dist[v]);
    const auto lv = leaves(f.graph);
    CHECK(lv.size() == 27);
    for (VertexId v : lv) CHECK(f.rooted->level[v] == 3);
    CHECK_FALSE(f.rooted->parent[0].has_value());
    CHECK(f.rooted->parent[4] == VertexId{1});  // children of v are 3v+1..3v+3
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(build_family(PathSpec{0}), std::invalid_argument);
    CHECK_THROWS_AS(build_family(StarSpec{1}), std::invalid_argument);
    CHECK_THROWS_AS(build_family(ArySpec{0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(build_family(CaterpillarSpec{{}}), std::invalid_argument);
    CHECK_THROWS_AS(build_family(LobsterSpec{{}}), std::invalid_argument);
    CHECK_THROWS_AS(build_family(ArySpec{2, 30}), std::invalid_argument);
}

TEST_CASE("graph construction validates edges") {
    const std::vector<Edge> loop = {{0, 0}};
    CHECK_THROWS_AS(Graph::from_edges(2, loop), std::invalid_argument);
    const std::vector<Edge> dup = {{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Graph::from_edges(2, dup), std::invalid_argument);
    const std::vector<Edge> out = {{0, 2}};
    CHECK_THROWS_AS(Graph::from_edges(2, out), std::invalid_argument);
}

TEST_CASE("distances") {
    const Graph star = build_family(StarSpec{5}).graph;
    CHECK(distances_from(star, 0) == std::vector<std::uint32_t>{0, 1, 1, 1, 1});
    const Graph path = build_family(PathSpec{5}).graph;
    CHECK(distances_from(path, 0) == std::vector<std::uint32_t>{0, 1, 2, 3, 4});
}

TEST_CASE("distances agree with Floyd-Warshall and are additive on trees") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        const Graph t = random_tree(2 + i % 11, rng);
        const auto d = floyd(t);
        for (VertexId u = 0; u < t.vertex_count(); ++u) {
            const auto du = distances_from(t, u);
            for (VertexId v = 0; v < t.vertex_count(); ++v) {
                CHECK(du[v] == d[u][v]);
                for (VertexId w = 0; w < t.vertex_count(); ++w) {
                    // w on the u-v path iff the distances add up
                    if (d[u][w] + d[w][v] == d[u][v]) CHECK(du[v] == du[w] + distances_from(t, w)[v]);
                }
            }
        }
    }
}

TEST_CASE("diameter and longest path") {
    const Graph p7 = build_family(PathSpec{7}).graph;
    const auto lp = diameter_and_longest_path(p7);
    CHECK(lp.diameter == 6);
    CHECK(lp.path.size() == 7);
    CHECK(diameter_and_longest_path(build_family(StarSpec{6}).graph).diameter == 2);
    for (const auto& ng : validation_graphs()) {
        const auto r = diameter_and_longest_path(ng.graph);
        CHECK(r.diameter == oracle_diameter(ng.graph));
        CHECK(r.path.size() == r.diameter + 1);
        for (std::size_t i = 0; i + 1 < r.path.size(); ++i) CHECK(ng.graph.adjacent(r.path[i], r.path[i + 1]));
    }
    const Graph lob = build_family(LobsterSpec{{{2, 1}, {0}, {1, 3}}}).graph;
    const auto l = diameter_and_longest_path(lob);
    CHECK(l.diameter == oracle_diameter(lob));
    CHECK(l.diameter == 6);
    const auto d = floyd(lob);
    CHECK(d[l.path.front()][l.path.back()] == l.diameter);
}

TEST_CASE("leaves") {
    const auto p4 = leaves(build_family(PathSpec{4}).graph);
    CHECK(p4.size() == 2);
    CHECK(leaves(build_family(PathSpec{1}).graph) == std::vector<VertexId>{0});
    // cat:0,2,0: 3 spine vertices, 2 attached leaves plus both spine ends
    CHECK(leaves(build_family(CaterpillarSpec{{0, 2, 0}}).graph).size() == 4);
}

TEST_CASE("caterpillar and lobster structure") {
    CHECK(is_caterpillar(build_family(CaterpillarSpec{{1, 0, 2, 1}}).graph));
    CHECK(is_caterpillar(build_family(PathSpec{6}).graph));
    CHECK(is_lobster(build_family(CaterpillarSpec{{1, 0, 2, 1}}).graph));
    const Graph lob = build_family(LobsterSpec{{{1, 1, 1, 1}}}).graph;
    CHECK(lob.vertex_count() == 9);
    CHECK(is_lobster(lob));
    CHECK_FALSE(is_caterpillar(lob));
    CHECK(diameter_and_longest_path(lob).diameter == 4);
    // Lobster with leafless legs is a caterpillar.
    CHECK(is_caterpillar(build_family(LobsterSpec{{{0, 0}, {0}}}).graph));
    // Ary(3,3) is neither.
    CHECK_FALSE(is_lobster(build_family(ArySpec{3, 3}).graph));
}

TEST_CASE("remove_vertex renumbers") {
    const Graph p4 = build_family(PathSpec{4}).graph;
    const Graph p3 = remove_vertex(p4, 0);
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.is_tree());
    CHECK(diameter_and_longest_path(p3).diameter == 2);
}

TEST_CASE("non-isomorphic tree counts") {
    const std::vector<std::size_t> expected = {1, 1, 1, 2, 3, 6, 11, 23};
    for (std::size_t n = 1; n <= 8; ++n) CHECK(nonisomorphic_trees(n).size() == expected[n - 1]);
}

}
