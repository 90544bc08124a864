#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "orientlab/orientation.hpp"

using namespace orientlab;

namespace {

// Single-edge parent, multiplicity 2 on both ends: the gadget playground.
struct EdgePair {
    Graph mul;
    MulSpec spec;
    EdgePair() {
        Graph k2 = build_family(Family::Complete, 2);
        auto [m, s] = vertex_multiplication(k2, std::vector<int>{2, 2});
        mul = m;
        spec = s;
    }
};

std::set<std::pair<int, int>> arc_set(const Orientation& d) {
    auto a = d.arcs();
    return {a.begin(), a.end()};
}

}  // namespace

TEST_CASE("gadget arc sets match the four reference patterns") {
    EdgePair ep;
    auto id = [&](int c, int b) { return ep.spec.id(c, b); };
    auto apply = [&](GadgetKind k) {
        MulOrientationBuilder b(ep.mul, ep.spec);
        b.gadget(k, 0, 1);
        return arc_set(b.finalize());
    };
    using A = std::set<std::pair<int, int>>;

    CHECK(apply(GadgetKind::Parallel) == A{{id(0, 0), id(0, 1)},
                                           {id(0, 0), id(1, 1)},
                                           {id(1, 0), id(0, 1)},
                                           {id(1, 0), id(1, 1)}});
    CHECK(apply(GadgetKind::Cyclic) == A{{id(0, 0), id(0, 1)},
                                         {id(0, 1), id(1, 0)},
                                         {id(1, 0), id(1, 1)},
                                         {id(1, 1), id(0, 0)}});
    CHECK(apply(GadgetKind::Twohead1) == A{{id(0, 0), id(0, 1)},
                                           {id(1, 0), id(0, 1)},
                                           {id(1, 1), id(0, 0)},
                                           {id(1, 1), id(1, 0)}});
    CHECK(apply(GadgetKind::Twohead2) == A{{id(0, 1), id(0, 0)},
                                           {id(0, 1), id(1, 0)},
                                           {id(0, 0), id(1, 1)},
                                           {id(1, 0), id(1, 1)}});
}

TEST_CASE("double orientation of a base edge is a construction bug") {
    EdgePair ep;
    MulOrientationBuilder b(ep.mul, ep.spec);
    b.gadget(GadgetKind::Cyclic, 0, 1);
    CHECK_THROWS_AS(b.gadget(GadgetKind::Cyclic, 1, 0), std::logic_error);
    CHECK_FALSE(b.gadget_if_free(GadgetKind::Cyclic, 1, 0));
    CHECK(b.unoriented_base_edges().empty());
}

TEST_CASE("gadgets demand multiplicity 2 and an existing base edge") {
    Graph p3 = build_family(Family::Path, 3);
    auto [mul, spec] = vertex_multiplication(p3, std::vector<int>{2, 3, 2});
    MulOrientationBuilder b(mul, spec);
    CHECK_THROWS_AS(b.gadget(GadgetKind::Cyclic, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(b.gadget(GadgetKind::Parallel, 0, 2), std::invalid_argument);
    b.gadget(GadgetKind::Parallel, 0, 1);  // parallel tolerates any multiplicities
}

TEST_CASE("reverse is an involution and swaps distances") {
    // Cyclic gadgets around a 6-cycle give a strong orientation to play with.
    Graph c6 = build_family(Family::Cycle, 6);
    auto [mul, spec] = vertex_multiplication(c6, std::vector<int>(6, 2));
    MulOrientationBuilder b(mul, spec);
    for (int i = 0; i < 6; ++i) b.gadget(GadgetKind::Cyclic, i, (i + 1) % 6);
    Orientation d = b.finalize();
    CHECK(arc_set(reverse(reverse(d))) == arc_set(d));

    for (int v = 0; v < d.base.n; ++v) {
        CHECK(d.out[v] == reverse(d).in[v]);
        CHECK(d.in[v] == reverse(d).out[v]);
    }

    DirectedMetrics fwd = directed_metrics(d);
    DirectedMetrics bwd = directed_metrics(reverse(d));
    REQUIRE(fwd.strong);
    for (int u = 0; u < d.base.n; ++u)
        for (int v = 0; v < d.base.n; ++v) REQUIRE(bwd.dist[u][v] == fwd.dist[v][u]);
}

TEST_CASE("directed metrics") {
    Graph c4 = build_family(Family::Cycle, 4);
    Orientation ring = orientation_from_arcs(
        c4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    DirectedMetrics m = directed_metrics(ring);
    CHECK(m.strong);
    CHECK(*m.diameter == 3);
    CHECK(min_cycle_per_vertex(ring) == 4);

    Graph p4 = build_family(Family::Path, 4);
    Orientation path = orientation_from_arcs(
        p4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    DirectedMetrics pm = directed_metrics(path);
    CHECK_FALSE(pm.strong);
    CHECK_FALSE(pm.diameter.has_value());
    CHECK_THROWS_AS(min_cycle_per_vertex(path), std::invalid_argument);
}

TEST_CASE("directed distances dominate undirected ones") {
    Graph c5 = build_family(Family::Cycle, 5);
    Orientation ring = orientation_from_arcs(
        c5, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    Metrics base = metrics(c5);
    DirectedMetrics dm = directed_metrics(ring);
    int arcs = 0;
    for (int v = 0; v < 5; ++v) arcs += static_cast<int>(ring.out[v].size());
    CHECK(arcs == c5.edge_count());
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v) CHECK(dm.dist[u][v] >= base.dist[u][v]);
}

TEST_CASE("min cycle and the lifting bound") {
    Graph c7 = build_family(Family::Cycle, 7);
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < 7; ++i) arcs.emplace_back(i, (i + 1) % 7);
    Orientation ring7 = orientation_from_arcs(c7, arcs);
    CHECK(min_cycle_per_vertex(ring7) == 7);
    CHECK_THROWS_AS(lift_bound(ring7, 4), std::invalid_argument);

    Graph c4 = build_family(Family::Cycle, 4);
    Orientation ring4 = orientation_from_arcs(
        c4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(lift_bound(ring4, 4) == 4);
}

TEST_CASE("finalize rejects partial orientations") {
    Graph p3 = build_family(Family::Path, 3);
    OrientationBuilder b(p3);
    b.arc(0, 1);
    CHECK_THROWS_AS(b.finalize(), std::logic_error);
    CHECK_THROWS_AS(b.arc(1, 0), std::logic_error);
    CHECK_THROWS_AS(b.arc(0, 2), std::invalid_argument);
    b.arc(2, 1);
    Orientation d = b.finalize();
    CHECK(d.has_arc(0, 1));
    CHECK(d.has_arc(2, 1));
}

TEST_CASE("extending multiplicities keeps the certified bounds") {
    // Cyclic ring over C4's 2-multiplication, then grow two of the classes.
    Graph c4 = build_family(Family::Cycle, 4);
    auto [mul, spec] = vertex_multiplication(c4, std::vector<int>(4, 2));
    MulOrientationBuilder b(mul, spec);
    for (int i = 0; i < 4; ++i) b.gadget(GadgetKind::Cyclic, i, (i + 1) % 4);
    Orientation d = b.finalize();
    int bound = lift_bound(d, 4);

    auto [big, big_spec] = extend_multiplication(c4, spec, d, std::vector<int>{4, 2, 3, 2});
    CHECK(big.base.n == 11);
    DirectedMetrics dm = directed_metrics(big);
    REQUIRE(dm.strong);
    CHECK(*dm.diameter <= bound);
    CHECK(min_cycle_per_vertex(big) <= 4);

    CHECK_THROWS_AS(extend_multiplication(c4, spec, d, std::vector<int>{1, 2, 2, 2}),
                    std::invalid_argument);
}

TEST_CASE("outs and ins partition every neighborhood") {
    Graph c6 = build_family(Family::Cycle, 6);
    auto [mul, spec] = vertex_multiplication(c6, std::vector<int>(6, 2));
    MulOrientationBuilder b(mul, spec);
    for (int i = 0; i < 6; ++i)
        b.gadget(i % 2 ? GadgetKind::Cyclic : GadgetKind::Parallel, i, (i + 1) % 6);
    Orientation d = b.finalize();
    for (int v = 0; v < d.base.n; ++v) {
        std::vector<int> both = d.out[v];
        both.insert(both.end(), d.in[v].begin(), d.in[v].end());
        std::sort(both.begin(), both.end());
        CHECK(both == d.base.adj[v]);
    }
}
