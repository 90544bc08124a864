#include "orientlab/constructions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orientlab {

namespace {

std::vector<int> twos(int n) { return std::vector<int>(n, 2); }

struct BuiltRules {
    Orientation orient;
    std::vector<MulOrientationBuilder::Attribution> rules;
};

// Product vertex <a,b> -> a*nb + b, matching cartesian_product's row-major ids.
struct ProductIndex {
    int nb;
    int operator()(int a, int b) const { return a * nb + b; }
};

// --- T_lambda x T_mu, split by center parity into three rule sets. The
// first factor carries the role described by `first`, the second by
// `second`. Rules fire backbone-first; later chains skip oriented edges.

BuiltRules tree_tree_case1(const TreeLabeling& first, const TreeLabeling& second) {
    // first has even diameter (single center), second odd (two centers).
    const Graph prod = cartesian_product(first.tree, second.tree);
    auto [mul, spec] = vertex_multiplication(prod, twos(prod.n));
    MulOrientationBuilder b(mul, spec);
    ProductIndex pv{second.tree.n};

    int c = first.center[0];
    int c1 = second.center[0], c2 = second.center[1];

    // Backbone squares through the two center columns.
    for (int y : first.children(0)) {
        b.gadget(GadgetKind::Parallel, pv(c, c2), pv(y, c2));
        b.gadget(GadgetKind::Parallel, pv(y, c2), pv(y, c1));
        b.gadget(GadgetKind::Parallel, pv(y, c1), pv(c, c1));
    }
    b.gadget(GadgetKind::Parallel, pv(c, c1), pv(c, c2));

    // Second-factor chains toward the centers, in every first-factor fiber.
    for (int x = 0; x < first.tree.n; ++x) {
        for (int side = 0; side < 2; ++side) {
            for (int ch : second.children(side)) {
                for (int gc : second.grandchildren(ch))
                    b.gadget_if_free(GadgetKind::Cyclic, pv(x, gc), pv(x, ch));
                b.gadget_if_free(GadgetKind::Cyclic, pv(x, ch), pv(x, second.center[side]));
            }
        }
        b.gadget_if_free(GadgetKind::Cyclic, pv(x, c2), pv(x, c1));
    }

    // First-factor chains toward the center, in every second-factor fiber.
    for (int k : first.children(0)) {
        for (int y = 0; y < second.tree.n; ++y) {
            for (int gk : first.grandchildren(k))
                b.gadget_if_free(GadgetKind::Cyclic, pv(gk, y), pv(k, y));
            b.gadget_if_free(GadgetKind::Cyclic, pv(k, y), pv(c, y));
        }
    }
    return {b.finalize(), b.rule_log()};
}

BuiltRules tree_tree_case2(const TreeLabeling& first, const TreeLabeling& second) {
    // Both diameters even; both factors have a single center.
    const Graph prod = cartesian_product(first.tree, second.tree);
    auto [mul, spec] = vertex_multiplication(prod, twos(prod.n));
    MulOrientationBuilder b(mul, spec);
    ProductIndex pv{second.tree.n};

    int cf = first.center[0];
    int cs = second.center[0];

    for (int i : first.children(0)) b.gadget(GadgetKind::Parallel, pv(i, cs), pv(cf, cs));
    for (int i : first.children(0))
        for (int j : second.children(0)) b.gadget(GadgetKind::Parallel, pv(cf, j), pv(i, j));

    for (int i : first.children(0)) {
        for (int y = 0; y < second.tree.n; ++y) {
            for (int gi : first.grandchildren(i))
                b.gadget_if_free(GadgetKind::Cyclic, pv(gi, y), pv(i, y));
            b.gadget_if_free(GadgetKind::Cyclic, pv(i, y), pv(cf, y));
        }
    }
    for (int x = 0; x < first.tree.n; ++x) {
        for (int j : second.children(0)) {
            for (int gj : second.grandchildren(j))
                b.gadget_if_free(GadgetKind::Cyclic, pv(x, gj), pv(x, j));
            b.gadget_if_free(GadgetKind::Cyclic, pv(x, j), pv(x, cs));
        }
    }
    return {b.finalize(), b.rule_log()};
}

BuiltRules tree_tree_case3(const TreeLabeling& first, const TreeLabeling& second) {
    // Both diameters odd; two centers on each side.
    const Graph prod = cartesian_product(first.tree, second.tree);
    auto [mul, spec] = vertex_multiplication(prod, twos(prod.n));
    MulOrientationBuilder b(mul, spec);
    ProductIndex pv{second.tree.n};

    int f1 = first.center[0], f2 = first.center[1];
    int s1 = second.center[0], s2 = second.center[1];

    // Backbone squares around each second-factor center and its children.
    b.gadget(GadgetKind::Parallel, pv(f1, s1), pv(f2, s1));
    for (int i : second.children(0)) {
        b.gadget(GadgetKind::Parallel, pv(f1, i), pv(f1, s1));
        b.gadget(GadgetKind::Parallel, pv(f2, s1), pv(f2, i));
        b.gadget(GadgetKind::Parallel, pv(f2, i), pv(f1, i));
    }
    b.gadget(GadgetKind::Parallel, pv(f1, s2), pv(f2, s2));
    for (int j : second.children(1)) {
        b.gadget(GadgetKind::Parallel, pv(f1, j), pv(f1, s2));
        b.gadget(GadgetKind::Parallel, pv(f2, s2), pv(f2, j));
        b.gadget(GadgetKind::Parallel, pv(f2, j), pv(f1, j));
    }

    // Second-factor chains toward the centers in every fiber.
    for (int x = 0; x < first.tree.n; ++x) {
        for (int side = 0; side < 2; ++side) {
            for (int ch : second.children(side)) {
                for (int gc : second.grandchildren(ch))
                    b.gadget_if_free(GadgetKind::Cyclic, pv(x, gc), pv(x, ch));
                b.gadget_if_free(GadgetKind::Cyclic, pv(x, ch), pv(x, second.center[side]));
            }
        }
        b.gadget_if_free(GadgetKind::Cyclic, pv(x, s2), pv(x, s1));
    }

    // First-factor chains: side 1 drains into its center; side 2 continues
    // across the central edge wherever that edge is still free.
    for (int k : first.children(0)) {
        for (int y = 0; y < second.tree.n; ++y) {
            for (int gk : first.grandchildren(k))
                b.gadget_if_free(GadgetKind::Cyclic, pv(gk, y), pv(k, y));
            b.gadget_if_free(GadgetKind::Cyclic, pv(k, y), pv(f1, y));
        }
    }
    for (int l : first.children(1)) {
        for (int y = 0; y < second.tree.n; ++y) {
            for (int gl : first.grandchildren(l))
                b.gadget_if_free(GadgetKind::Cyclic, pv(gl, y), pv(l, y));
            b.gadget_if_free(GadgetKind::Cyclic, pv(l, y), pv(f2, y));
            b.gadget_if_free(GadgetKind::Cyclic, pv(f2, y), pv(f1, y));
        }
    }
    return {b.finalize(), b.rule_log()};
}

ConstructionResult finish(std::string id, std::string family, Graph parent, MulSpec spec,
                          BuiltRules built, int claimed, bool exact, int cycle_bound,
                          std::string cls) {
    ConstructionResult r;
    r.id = std::move(id);
    r.family = std::move(family);
    r.parent = std::move(parent);
    r.spec = std::move(spec);
    r.orient = std::move(built.orient);
    r.rules = std::move(built.rules);
    r.claimed_diameter = claimed;
    r.claim_exact = exact;
    r.cycle_bound = cycle_bound;
    r.claimed_class = std::move(cls);
    return r;
}

}  // namespace

ConstructionResult tree_tree(const TreeLabeling& tl, const TreeLabeling& tm) {
    int lambda = tl.diameter, mu = tm.diameter;
    if (lambda < 2 || lambda > 5 || mu < 3 || mu > 5)
        throw std::invalid_argument("tree_tree: supported diameters are 2..5 x 3..5");

    bool l_even = lambda % 2 == 0, m_even = mu % 2 == 0;
    BuiltRules built;
    bool transposed = false;
    if (l_even && !m_even) {
        built = tree_tree_case1(tl, tm);
    } else if (l_even && m_even) {
        built = tree_tree_case2(tl, tm);
    } else if (!l_even && !m_even) {
        built = tree_tree_case3(tl, tm);
    } else {
        // lambda odd, mu even: construct on the swapped product, then map back.
        built = tree_tree_case1(tm, tl);
        transposed = true;
    }

    Graph prod = cartesian_product(tl.tree, tm.tree);
    auto [mul, spec] = vertex_multiplication(prod, twos(prod.n));

    if (transposed) {
        int na = tl.tree.n, nb = tm.tree.n;
        const MulSpec& sspec = spec;  // both sides are uniform 2-multiplications
        auto map_base = [&](int swapped) {
            int b_coord = swapped / na, a_coord = swapped % na;
            return a_coord * nb + b_coord;
        };
        std::vector<std::pair<int, int>> arcs;
        for (auto [x, y] : built.orient.arcs()) {
            int bx = map_base(x / 2), by = map_base(y / 2);
            arcs.emplace_back(sspec.id(x % 2, bx), sspec.id(y % 2, by));
        }
        std::sort(arcs.begin(), arcs.end());
        built.orient = orientation_from_arcs(mul, arcs);
        for (auto& a : built.rules) {
            int u = map_base(a.base_u), v = map_base(a.base_v);
            a.base_u = std::min(u, v);
            a.base_v = std::max(u, v);
        }
    }

    std::ostringstream id;
    id << "tree_tree:" << lambda << "," << mu;
    return finish(id.str(), "tree_tree", std::move(prod), std::move(spec), std::move(built),
                  lambda + mu, true, 4, "C0 for every multiplication >= 2");
}

ConstructionResult grid(int lambda, int mu) {
    if (mu > lambda) throw std::invalid_argument("grid: requires lambda >= mu");
    if (mu < 2) throw std::invalid_argument("grid: requires mu >= 2");
    if (lambda == 2 && mu == 2)
        throw std::invalid_argument("grid: the 2x2 case is excluded (complete bipartite)");

    Graph prod = cartesian_product(build_family(Family::Path, lambda),
                                   build_family(Family::Path, mu));
    auto [mul, spec] = vertex_multiplication(prod, twos(prod.n));
    MulOrientationBuilder b(mul, spec);
    ProductIndex pv{mu};

    int claimed;
    std::string cls;
    if (lambda == 3 && mu == 2) {
        for (int j = 0; j < 2; ++j) {
            b.gadget(GadgetKind::Twohead1, pv(0, j), pv(1, j));
            b.gadget(GadgetKind::Twohead2, pv(2, j), pv(1, j));
        }
        for (int i = 0; i < 3; ++i) b.gadget(GadgetKind::Cyclic, pv(i, 0), pv(i, 1));
        claimed = 4;
        cls = "C1 at multiplicity 2; C0 or C1 in general";
    } else if (mu == 2) {
        b.gadget(GadgetKind::Twohead1, pv(0, 1), pv(1, 1));
        b.gadget(GadgetKind::Twohead2, pv(2, 1), pv(1, 1));
        b.gadget(GadgetKind::Twohead1, pv(lambda - 3, 0), pv(lambda - 2, 0));
        b.gadget(GadgetKind::Twohead2, pv(lambda - 1, 0), pv(lambda - 2, 0));
        for (int i = 0; i < lambda; ++i) b.gadget(GadgetKind::Cyclic, pv(i, 0), pv(i, 1));
        for (int j = 0; j + 3 < lambda; ++j) b.gadget(GadgetKind::Cyclic, pv(j, 0), pv(j + 1, 0));
        for (int k = 2; k + 1 < lambda; ++k) b.gadget(GadgetKind::Cyclic, pv(k, 1), pv(k + 1, 1));
        claimed = lambda;
        cls = "C0 for every multiplication >= 2";
    } else {
        int a = (lambda + 1) / 2 - 1, c = (mu + 1) / 2 - 1;  // central vertex, 0-based
        b.gadget(GadgetKind::Twohead1, pv(a - 1, c), pv(a, c));
        b.gadget(GadgetKind::Twohead2, pv(a + 1, c), pv(a, c));
        b.gadget(GadgetKind::Twohead1, pv(a, c - 1), pv(a, c));
        b.gadget(GadgetKind::Twohead2, pv(a, c + 1), pv(a, c));
        for (int i = 0; i + 1 < lambda; ++i)
            for (int j = 0; j < mu; ++j) b.gadget_if_free(GadgetKind::Cyclic, pv(i, j), pv(i + 1, j));
        for (int i = 0; i < lambda; ++i)
            for (int j = 0; j + 1 < mu; ++j) b.gadget_if_free(GadgetKind::Cyclic, pv(i, j), pv(i, j + 1));
        claimed = lambda + mu - 2;
        cls = "C0 for every multiplication >= 2";
    }

    std::ostringstream id;
    id << "grid:" << lambda << "," << mu;
    return finish(id.str(), "grid", std::move(prod), std::move(spec),
                  {b.finalize(), b.rule_log()}, claimed, true, 4, std::move(cls));
}

ConstructionResult q3() {
    // The 3-cube as two squares 1234, 5678 joined by a perfect matching.
    std::vector<std::pair<int, int>> e = {{0, 1}, {1, 2}, {2, 3}, {0, 3},
                                          {4, 5}, {5, 6}, {6, 7}, {4, 7},
                                          {0, 4}, {1, 5}, {2, 6}, {3, 7}};
    Graph cube = make_graph(8, e);
    auto [mul, spec] = vertex_multiplication(cube, twos(8));
    MulOrientationBuilder b(mul, spec);
    for (int i : {0, 4}) {
        b.gadget(GadgetKind::Cyclic, i, i + 1);
        b.gadget(GadgetKind::Cyclic, i + 1, i + 2);
        b.gadget(GadgetKind::Cyclic, i + 2, i + 3);
        b.gadget(GadgetKind::Cyclic, i, i + 3);
    }
    b.gadget(GadgetKind::Parallel, 3, 7);
    b.gadget(GadgetKind::Parallel, 1, 5);
    b.gadget(GadgetKind::Parallel, 4, 0);
    b.gadget(GadgetKind::Parallel, 6, 2);
    return finish("q3", "q3", std::move(cube), std::move(spec), {b.finalize(), b.rule_log()}, 3,
                  true, 4, "C0 at multiplicity 2; C0 or C1 in general");
}

ConstructionResult tree_cycle(const Graph& t, int mu) {
    if (!is_tree(t)) throw std::invalid_argument("tree_cycle: first factor is not a tree");
    int lambda = metrics(t).diameter;
    if (lambda < 2) throw std::invalid_argument("tree_cycle: tree diameter must be >= 2");
    if (mu < 3) throw std::invalid_argument("tree_cycle: cycle order must be >= 3");
    if (mu == 3 && lambda != 3)
        throw std::invalid_argument("tree_cycle: with a triangle only diameter-3 trees are supported");

    Graph prod = cartesian_product(t, build_family(Family::Cycle, mu));
    auto [mul, spec] = vertex_multiplication(prod, twos(prod.n));
    MulOrientationBuilder b(mul, spec);
    ProductIndex pv{mu};

    if (mu >= 4) {
        // Fibers over one side of the tree run the cycle forward, the other
        // side backward; tree edges carry cyclic gadgets.
        Bipartition parts = bipartition(t);
        for (int u = 0; u < t.n; ++u)
            for (int x = 0; x < mu; ++x) {
                int y = (x + 1) % mu;
                if (parts.color[u] == 0)
                    b.gadget(GadgetKind::Parallel, pv(u, x), pv(u, y));
                else
                    b.gadget(GadgetKind::Parallel, pv(u, y), pv(u, x));
            }
        for (auto [u, v] : t.edges())
            for (int x = 0; x < mu; ++x) b.gadget(GadgetKind::Cyclic, pv(u, x), pv(v, x));
    } else {
        TreeLabeling lab = label_tree(t);
        int c1 = lab.center[0], c2 = lab.center[1];
        for (int x = 0; x < 3; ++x) b.gadget(GadgetKind::Parallel, pv(c1, x), pv(c1, (x + 1) % 3));
        for (int x = 0; x < 3; ++x) b.gadget(GadgetKind::Parallel, pv(c2, (x + 1) % 3), pv(c2, x));
        for (int y = 0; y < 3; ++y) {
            for (int i : lab.children(0)) b.gadget(GadgetKind::Twohead1, pv(i, y), pv(c1, y));
            b.gadget(GadgetKind::Twohead2, pv(c2, y), pv(c1, y));
            for (int j : lab.children(1)) b.gadget(GadgetKind::Cyclic, pv(c2, y), pv(j, y));
        }
        for (int side = 0; side < 2; ++side)
            for (int ch : lab.children(side))
                for (int x = 0; x < 3; ++x)
                    b.gadget(GadgetKind::Cyclic, pv(ch, x), pv(ch, (x + 1) % 3));
    }

    std::ostringstream id;
    id << "tree_cycle:" << lambda << "," << mu;
    return finish(id.str(), "tree_cycle", std::move(prod), std::move(spec),
                  {b.finalize(), b.rule_log()}, lambda + mu / 2, true, 4,
                  "C0 for every multiplication >= 2");
}

ConstructionResult t2_complete(const TreeLabeling& t, int mu) {
    if (t.diameter != 2) throw std::invalid_argument("t2_complete: tree diameter must be 2");
    if (mu < 3) throw std::invalid_argument("t2_complete: complete factor order must be >= 3");

    Graph prod = cartesian_product(t.tree, build_family(Family::Complete, mu));
    auto [mul, spec] = vertex_multiplication(prod, twos(prod.n));
    MulOrientationBuilder b(mul, spec);
    ProductIndex pv{mu};

    int c = t.center[0];
    const auto& kids = t.children(0);
    for (int j = 0; j < mu; ++j) {
        b.gadget(GadgetKind::Twohead1, pv(kids[0], j), pv(c, j));
        for (std::size_t i = 1; i < kids.size(); ++i)
            b.gadget(GadgetKind::Twohead2, pv(kids[i], j), pv(c, j));
    }
    // Complete-graph fibers: ascending chains, with edges {1,j} for j >= 3
    // flipped back toward vertex 1.
    for (int v = 0; v < t.tree.n; ++v) {
        b.gadget(GadgetKind::Cyclic, pv(v, 0), pv(v, 1));
        for (int j1 = 1; j1 < mu; ++j1)
            for (int j2 = j1 + 1; j2 < mu; ++j2) b.gadget(GadgetKind::Cyclic, pv(v, j1), pv(v, j2));
        for (int j = 2; j < mu; ++j) b.gadget(GadgetKind::Cyclic, pv(v, j), pv(v, 0));
    }

    int deg = static_cast<int>(kids.size());
    int claimed = deg == 2 ? 3 : 4;
    std::string cls = deg == 2 ? "C0 for every multiplication >= 2"
                               : "C1 at multiplicity 2; C0 or C1 in general";
    std::ostringstream id;
    id << "t2_complete:" << deg << "," << mu;
    return finish(id.str(), "t2_complete", std::move(prod), std::move(spec),
                  {b.finalize(), b.rule_log()}, claimed, true, 3, std::move(cls));
}

ConstructionResult p2_complete(int mu) {
    if (mu < 3) throw std::invalid_argument("p2_complete: complete factor order must be >= 3");
    Graph prod = cartesian_product(build_family(Family::Path, 2),
                                   build_family(Family::Complete, mu));
    auto [mul, spec] = vertex_multiplication(prod, twos(prod.n));
    MulOrientationBuilder b(mul, spec);
    ProductIndex pv{mu};

    b.gadget(GadgetKind::Parallel, pv(1, 0), pv(0, 0));
    b.gadget(GadgetKind::Parallel, pv(0, 1), pv(1, 1));
    for (int j = 2; j < mu; ++j) b.gadget(GadgetKind::Cyclic, pv(0, j), pv(1, j));
    for (int k = 0; k < 2; ++k) {
        b.gadget(GadgetKind::Cyclic, pv(k, 0), pv(k, 1));
        for (int j1 = 1; j1 < mu; ++j1)
            for (int j2 = j1 + 1; j2 < mu; ++j2) b.gadget(GadgetKind::Cyclic, pv(k, j1), pv(k, j2));
        for (int j = 2; j < mu; ++j) b.gadget(GadgetKind::Cyclic, pv(k, j), pv(k, 0));
    }

    std::ostringstream id;
    id << "p2_complete:" << mu;
    return finish(id.str(), "p2_complete", std::move(prod), std::move(spec),
                  {b.finalize(), b.rule_log()}, 3, true, 3,
                  "C1 for every multiplication >= 2");
}

ConstructionResult cycle_cycle(int lambda, int mu) {
    if (lambda < mu) throw std::invalid_argument("cycle_cycle: requires lambda >= mu");
    if (mu < 3) throw std::invalid_argument("cycle_cycle: requires mu >= 3");
    if (mu == 3 && lambda > 4)
        throw std::invalid_argument(
            "cycle_cycle: C_lambda x C_3 with lambda >= 5 needs an orientation of "
            "C_lambda's 2-multiplication, which is outside this catalogue");

    Graph prod = cartesian_product(build_family(Family::Cycle, lambda),
                                   build_family(Family::Cycle, mu));
    auto [mul, spec] = vertex_multiplication(prod, twos(prod.n));
    MulOrientationBuilder b(mul, spec);
    ProductIndex pv{mu};

    int claimed;
    int cycle_bound = 4;
    std::string cls;
    if (lambda == 4 && mu == 3) {
        for (int i = 0; i < 3; ++i) {
            b.gadget(GadgetKind::Cyclic, pv(1, i), pv(0, i));
            b.gadget(GadgetKind::Cyclic, pv(2, i), pv(3, i));
        }
        auto chain = [&](std::initializer_list<std::pair<int, int>> cells) {
            const std::pair<int, int>* prev = nullptr;
            for (const auto& cell : cells) {
                if (prev)
                    b.gadget(GadgetKind::Parallel, pv(prev->first, prev->second),
                             pv(cell.first, cell.second));
                prev = &cell;
            }
        };
        chain({{0, 1}, {0, 0}, {3, 0}, {3, 1}, {0, 1}, {0, 2}, {3, 2}, {3, 1}});
        chain({{2, 1}, {2, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {1, 2}, {1, 1}});
        b.gadget(GadgetKind::Parallel, pv(0, 2), pv(0, 0));
        b.gadget(GadgetKind::Parallel, pv(3, 0), pv(3, 2));
        b.gadget(GadgetKind::Parallel, pv(2, 2), pv(2, 0));
        b.gadget(GadgetKind::Parallel, pv(1, 0), pv(1, 2));
        claimed = 3;
        cls = "C0 at multiplicity 2; C0 or C1 in general";
    } else {
        // Odd-numbered fibers run the second cycle forward, even ones backward;
        // first-cycle edges all carry cyclic gadgets.
        for (int u = 0; u < lambda; ++u)
            for (int x = 0; x < mu; ++x) {
                int y = (x + 1) % mu;
                if (u % 2 == 0)
                    b.gadget(GadgetKind::Parallel, pv(u, x), pv(u, y));
                else
                    b.gadget(GadgetKind::Parallel, pv(u, y), pv(u, x));
            }
        for (int u = 0; u < lambda; ++u)
            for (int x = 0; x < mu; ++x)
                b.gadget(GadgetKind::Cyclic, pv(u, x), pv((u + 1) % lambda, x));
        if (lambda == 3 && mu == 3) {
            // The parity orientation of the 3x3 torus attains one above the
            // base diameter; no better bound is claimed for it.
            claimed = 3;
            cls = "C0 or C1 for every multiplication >= 2";
            cycle_bound = 3;
        } else {
            claimed = lambda / 2 + mu / 2;
            cls = "C0 for every multiplication >= 2";
        }
    }

    std::ostringstream id;
    id << "cycle_cycle:" << lambda << "," << mu;
    return finish(id.str(), "cycle_cycle", std::move(prod), std::move(spec),
                  {b.finalize(), b.rule_log()}, claimed, true, cycle_bound, std::move(cls));
}

ConstructionResult p3p2_c0_example() {
    Graph prod = cartesian_product(build_family(Family::Path, 3), build_family(Family::Path, 2));
    // <i,j> -> 2*(i-1)+(j-1); multiplicity 4 at <2,1> and <2,2>.
    std::vector<int> s = {2, 2, 4, 4, 2, 2};
    auto [mul, spec] = vertex_multiplication(prod, s);
    MulOrientationBuilder b(mul, spec);
    auto pv = [](int i, int j) { return 2 * i + j; };

    b.gadget(GadgetKind::Parallel, pv(0, 1), pv(0, 0));  // <1,2> => <1,1>
    b.gadget(GadgetKind::Parallel, pv(2, 1), pv(2, 0));  // <3,2> => <3,1>
    b.gadget(GadgetKind::Parallel, pv(1, 0), pv(1, 1));  // all copies <2,1> -> <2,2>
    for (int i = 0; i < 2; ++i) {
        int mid = pv(1, i), left = pv(0, i), right = pv(2, i);
        for (int p : {1, 3}) b.arc(p, mid, 0, left);
        for (int q : {0, 2}) b.arc(0, left, q, mid);
        for (int p : {0, 2}) b.arc(p, mid, 1, left);
        for (int q : {1, 3}) b.arc(1, left, q, mid);
        for (int p : {0, 3}) b.arc(p, mid, 0, right);
        for (int q : {1, 2}) b.arc(0, right, q, mid);
        for (int p : {1, 2}) b.arc(p, mid, 1, right);
        for (int q : {0, 3}) b.arc(1, right, q, mid);
    }
    return finish("p3p2_c0_example", "p3p2_c0_example", std::move(prod), std::move(spec),
                  {b.finalize(), b.rule_log()}, 3, true, 4, "C0 for this multiplication");
}

ConstructionResult lift_product(const Graph& g, const Orientation& d_of_g2, const Graph& h,
                                const std::string& id) {
    auto [g2, g2spec] = vertex_multiplication(g, twos(g.n));
    if (d_of_g2.base.n != g2.n || d_of_g2.base.edges() != g2.edges())
        throw std::invalid_argument("lift_product: orientation is not over g's 2-multiplication");
    DirectedMetrics dm = directed_metrics(d_of_g2);
    if (!dm.strong) throw std::invalid_argument("lift_product: input orientation is not strong");
    int dg = metrics(g).diameter;
    if (dg < 2) throw std::invalid_argument("lift_product: requires d(g) >= 2");
    int dh = metrics(h).diameter;
    int dd = *dm.diameter;

    Graph prod = cartesian_product(g, h);
    auto [mul, spec] = vertex_multiplication(prod, twos(prod.n));
    MulOrientationBuilder b(mul, spec);
    ProductIndex pv{h.n};

    // Every h-fiber is a verbatim copy of the input orientation.
    for (int x = 0; x < h.n; ++x)
        for (auto [a, c] : d_of_g2.arcs()) {
            int u = g2spec.base_of(a), v = g2spec.base_of(c);
            b.arc(g2spec.copy_of(a), pv(u, x), g2spec.copy_of(c), pv(v, x));
        }
    // Steps along h close into directed squares.
    for (int u = 0; u < g.n; ++u)
        for (auto [x, y] : h.edges()) b.gadget(GadgetKind::Cyclic, pv(u, x), pv(u, y));

    bool exact = dd == dg;
    return finish(id.empty() ? "lift" : id, "lift", std::move(prod), std::move(spec),
                  {b.finalize(), b.rule_log()}, dd + dh, exact, 4,
                  exact ? "C0 for every multiplication >= 2"
                        : "C0 or C1 for every multiplication >= 2");
}

ConstructionResult lift_product(const ConstructionResult& base, const Graph& h) {
    for (int si : base.spec.s)
        if (si != 2)
            throw std::invalid_argument("lift_product: base construction must be a 2-multiplication");
    return lift_product(base.parent, base.orient, h, "lift(" + base.id + ")");
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int to_int(const std::string& s) {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
    return v;
}

Graph tree_of_diameter(int d, bool spider) {
    return spider ? nonpath_tree(d) : build_family(Family::Path, d + 1);
}

}  // namespace

ConstructionResult build_construction(const std::string& id) {
    auto parts = split(id, ':');
    const std::string& family = parts[0];
    auto args = parts.size() > 1 ? split(parts[1], ',') : std::vector<std::string>{};
    bool spider = parts.size() > 2 && parts[2] == "spider";
    if (parts.size() > 3 || (parts.size() > 2 && !spider))
        throw std::invalid_argument("unknown construction id '" + id + "'");
    auto want = [&](std::size_t n) {
        if (args.size() != n)
            throw std::invalid_argument("construction '" + family + "' expects " +
                                        std::to_string(n) + " parameters");
    };

    if (family == "tree_tree") {
        want(2);
        auto r = tree_tree(label_tree(tree_of_diameter(to_int(args[0]), spider)),
                           label_tree(tree_of_diameter(to_int(args[1]), spider)));
        r.id = id;
        return r;
    }
    if (family == "grid") {
        want(2);
        return grid(to_int(args[0]), to_int(args[1]));
    }
    if (family == "q3") {
        want(0);
        return q3();
    }
    if (family == "tree_cycle") {
        want(2);
        auto r = tree_cycle(tree_of_diameter(to_int(args[0]), spider), to_int(args[1]));
        r.id = id;
        return r;
    }
    if (family == "t2_complete") {
        want(2);
        int deg = to_int(args[0]);
        if (deg < 2) throw std::invalid_argument("t2_complete: center degree must be >= 2");
        Graph t = deg == 2 ? build_family(Family::Path, 3) : build_family(Family::Star, deg);
        auto r = t2_complete(label_tree(t), to_int(args[1]));
        r.id = id;
        return r;
    }
    if (family == "p2_complete") {
        want(1);
        return p2_complete(to_int(args[0]));
    }
    if (family == "cycle_cycle") {
        want(2);
        return cycle_cycle(to_int(args[0]), to_int(args[1]));
    }
    if (family == "p3p2_c0_example") {
        want(0);
        return p3p2_c0_example();
    }
    if (family == "lift") {
        want(3);
        ConstructionResult base;
        if (args[0] == "q3")
            base = q3();
        else if (args[0] == "grid33")
            base = grid(3, 3);
        else
            throw std::invalid_argument("lift: base must be 'q3' or 'grid33'");
        auto fam = family_from_string(args[1]);
        if (!fam || (*fam != Family::Path && *fam != Family::Cycle))
            throw std::invalid_argument("lift: second factor must be path:<n> or cycle:<n>");
        auto r = lift_product(base, build_family(*fam, to_int(args[2])));
        r.id = id;
        return r;
    }
    throw std::invalid_argument("unknown construction id '" + id + "'");
}

std::vector<std::string> verification_ids() {
    return {
        "tree_tree:2,3", "tree_tree:2,4", "tree_tree:2,5", "tree_tree:3,3", "tree_tree:3,5",
        "tree_tree:4,3", "tree_tree:4,4", "tree_tree:4,5", "tree_tree:5,5",
        "grid:3,2", "grid:4,2", "grid:3,3",
        "q3",
        "tree_cycle:3,3",
        "t2_complete:2,3", "t2_complete:3,3",
        "p2_complete:3",
        "cycle_cycle:4,3", "cycle_cycle:3,3",
        "p3p2_c0_example",
    };
}

}  // namespace orientlab
