#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "orientlab/graph.hpp"

using namespace orientlab;

TEST_CASE("standard families") {
    Graph p3 = build_family(Family::Path, 3);
    CHECK(p3.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(metrics(p3).diameter == 2);

    Graph c4 = build_family(Family::Cycle, 4);
    CHECK(c4.edge_count() == 4);
    CHECK(metrics(c4).diameter == 2);

    Graph q3 = build_family(Family::Hypercube, 3);
    CHECK(q3.n == 8);
    CHECK(q3.edge_count() == 12);
    CHECK(metrics(q3).diameter == 3);

    Graph star = build_family(Family::Star, 3);
    CHECK(star.n == 4);
    CHECK(star.degree(0) == 3);
    CHECK(metrics(star).diameter == 2);

    CHECK_THROWS_AS(build_family(Family::Cycle, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_family(Family::Path, 0), std::invalid_argument);
}

TEST_CASE("parse_tree") {
    Graph p3 = parse_tree(std::vector<int>{0, 1, 2});
    CHECK(p3.edges() == build_family(Family::Path, 3).edges());

    Graph star = parse_tree(std::vector<int>{0, 1, 1, 1});
    CHECK(star.degree(0) == 3);
    CHECK(metrics(star).diameter == 2);

    Graph p6 = parse_tree(std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(metrics(p6).diameter == 5);

    CHECK_THROWS_WITH_AS(parse_tree(std::vector<int>{0, 3, 2}),
                         doctest::Contains("cycle"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_tree(std::vector<int>{0, 0, 1}),
                         doctest::Contains("disconnected"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tree(std::vector<int>{0, 5}), std::invalid_argument);
    CHECK_THROWS_AS(parse_tree(std::vector<int>{2, 1}), std::invalid_argument);
}

TEST_CASE("cartesian product counts and labels") {
    Graph g = cartesian_product(build_family(Family::Path, 3), build_family(Family::Path, 2));
    CHECK(g.n == 6);
    CHECK(g.edge_count() == 7);
    CHECK(metrics(g).diameter == 3);
    CHECK(g.labels[0] == "<1,1>");
    CHECK(g.labels[5] == "<3,2>");

    // K2 x K2 is the 4-cycle.
    Graph k22 = cartesian_product(build_family(Family::Complete, 2),
                                  build_family(Family::Complete, 2));
    CHECK(k22.n == 4);
    CHECK(k22.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(k22.degree(v) == 2);
    CHECK(metrics(k22).diameter == 2);

    Graph c4c3 = cartesian_product(build_family(Family::Cycle, 4), build_family(Family::Cycle, 3));
    CHECK(c4c3.n == 12);
    CHECK(metrics(c4c3).diameter == 3);
}

TEST_CASE("product distances are coordinatewise sums") {
    auto check_additive = [](const Graph& a, const Graph& b) {
        Graph g = cartesian_product(a, b);
        Metrics mg = metrics(g), ma = metrics(a), mb = metrics(b);
        for (int u = 0; u < a.n; ++u)
            for (int x = 0; x < b.n; ++x)
                for (int v = 0; v < a.n; ++v)
                    for (int y = 0; y < b.n; ++y)
                        REQUIRE(mg.dist[u * b.n + x][v * b.n + y] ==
                                ma.dist[u][v] + mb.dist[x][y]);
    };
    check_additive(build_family(Family::Path, 4), build_family(Family::Cycle, 5));
    check_additive(build_family(Family::Complete, 3), build_family(Family::Cycle, 4));
    check_additive(build_family(Family::Star, 3), build_family(Family::Path, 5));
}

TEST_CASE("vertex multiplication") {
    Graph k3 = build_family(Family::Complete, 3);
    auto [tri, tri_spec] = vertex_multiplication(k3, std::vector<int>{2, 2, 2});
    CHECK(tri.n == 6);
    CHECK(tri.edge_count() == 12);  // complete tripartite 2,2,2
    CHECK(tri_spec.id(1, 2) == 5);
    CHECK(tri_spec.base_of(3) == 1);
    CHECK(tri_spec.copy_of(3) == 1);

    Graph p3 = build_family(Family::Path, 3);
    auto [same, spec1] = vertex_multiplication(p3, std::vector<int>{1, 1, 1});
    CHECK(same.edges() == p3.edges());

    Graph grid = cartesian_product(p3, build_family(Family::Path, 2));
    auto [mul, spec] = vertex_multiplication(grid, std::vector<int>(6, 2));
    CHECK(mul.n == 12);
    CHECK(mul.edge_count() == 28);
    CHECK(mul.labels[spec.id(1, 2)] == "(2,<2,1>)");

    CHECK_THROWS_AS(vertex_multiplication(p3, std::vector<int>{2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(vertex_multiplication(p3, std::vector<int>{2, 0, 2}), std::invalid_argument);
}

TEST_CASE("multiplication preserves diameter when it is at least 2") {
    auto diam_of_mul = [](const Graph& g, std::vector<int> s) {
        return metrics(vertex_multiplication(g, s).first).diameter;
    };
    Graph p4 = build_family(Family::Path, 4);
    CHECK(diam_of_mul(p4, {2, 1, 3, 2}) == 3);
    Graph c5 = build_family(Family::Cycle, 5);
    CHECK(diam_of_mul(c5, {2, 2, 2, 2, 2}) == 2);
    // Diameter 1 is the exception: the multiplied complete graph gains one.
    Graph k3 = build_family(Family::Complete, 3);
    CHECK(diam_of_mul(k3, {2, 2, 2}) == 2);
}

TEST_CASE("metrics on reference graphs") {
    Metrics p6 = metrics(build_family(Family::Path, 6));
    CHECK(p6.diameter == 5);
    CHECK(p6.radius == 3);

    Metrics q3 = metrics(build_family(Family::Hypercube, 3));
    CHECK(q3.diameter == 3);
    CHECK(q3.radius == 3);

    Graph big = cartesian_product(build_family(Family::Path, 5), build_family(Family::Path, 6));
    CHECK(metrics(big).diameter == 9);

    Graph two = make_graph(4, std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    CHECK_THROWS_WITH_AS(metrics(two), doctest::Contains("no path between"),
                         std::invalid_argument);
}

TEST_CASE("bipartition") {
    Bipartition p4 = bipartition(build_family(Family::Path, 4));
    CHECK(p4.bipartite);
    CHECK(p4.side(0).size() == 2);
    CHECK(p4.side(1).size() == 2);

    Bipartition c5 = bipartition(build_family(Family::Cycle, 5));
    CHECK_FALSE(c5.bipartite);
    REQUIRE(c5.odd_cycle.size() >= 3);
    CHECK(c5.odd_cycle.size() % 2 == 1);
    Graph g = build_family(Family::Cycle, 5);
    for (std::size_t i = 0; i < c5.odd_cycle.size(); ++i)
        CHECK(g.has_edge(c5.odd_cycle[i], c5.odd_cycle[(i + 1) % c5.odd_cycle.size()]));

    CHECK(bipartition(parse_tree(std::vector<int>{0, 1, 1, 2, 2})).bipartite);
}

TEST_CASE("bridges") {
    Graph tree = parse_tree(std::vector<int>{0, 1, 1, 2, 2});
    CHECK(bridges(tree).size() == 4);  // every tree edge

    CHECK(bridges(build_family(Family::Cycle, 6)).empty());

    Graph grid = cartesian_product(build_family(Family::Path, 3), build_family(Family::Path, 2));
    CHECK(bridges(grid).empty());

    // A triangle with a pendant edge has exactly that bridge.
    Graph g = make_graph(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    CHECK(bridges(g) == std::vector<std::pair<int, int>>{{2, 3}});
}

TEST_CASE("product additivity on a seeded random graph") {
    // Random connected graph: spanning path plus extra chords.
    std::mt19937 rng(99);
    int n = 8;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    for (int extra = 0; extra < 5; ++extra) {
        int u = rng() % n, v = rng() % n;
        if (u == v) continue;
        auto key = std::minmax(u, v);
        if (std::find(e.begin(), e.end(), std::pair<int, int>{key.first, key.second}) == e.end())
            e.emplace_back(key.first, key.second);
    }
    Graph a = make_graph(n, e);
    Graph b = build_family(Family::Cycle, 6);
    Graph g = cartesian_product(a, b);
    REQUIRE(g.n <= 100);
    Metrics mg = metrics(g), ma = metrics(a), mb = metrics(b);
    for (int u = 0; u < a.n; ++u)
        for (int x = 0; x < b.n; ++x)
            for (int v = 0; v < a.n; ++v)
                for (int y = 0; y < b.n; ++y)
                    REQUIRE(mg.dist[u * b.n + x][v * b.n + y] == ma.dist[u][v] + mb.dist[x][y]);
}
