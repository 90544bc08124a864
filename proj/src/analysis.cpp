#include "orientlab/analysis.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace orientlab {

unsigned long long sperner_max_antichain(int n) {
    if (n < 1) throw std::invalid_argument("sperner_max_antichain: n must be >= 1");
    if (n > 60) throw std::invalid_argument("sperner_max_antichain: n too large for exact 64-bit");
    unsigned long long c = 1;
    for (int i = 1; i <= n / 2; ++i) c = c * (n - i + 1) / i;  // exact at every step
    return c;
}

std::string ClassVerdict::describe() const {
    if (class_index) return "C" + std::to_string(*class_index);
    std::string s;
    for (int j = lower - base_diameter; j <= upper - base_diameter; ++j) {
        if (!s.empty()) s += "|";
        s += "C" + std::to_string(j);
    }
    return s;
}

ClassVerdict classify(const Graph& g, std::span<const int> s, const Orientation* upper_witness,
                      const std::string& witness_id,
                      const std::optional<LowerCertificate>& lower_cert) {
    if (g.n < 3) throw std::invalid_argument("classify: base graph must have >= 3 vertices");
    for (int si : s)
        if (si < 2) throw std::invalid_argument("classify: window needs every multiplicity >= 2");
    ClassVerdict v;
    v.base_diameter = metrics(g).diameter;
    v.lower = v.base_diameter;
    v.upper = v.base_diameter + 2;

    if (upper_witness) {
        auto [mul, spec] = vertex_multiplication(g, s);
        if (upper_witness->base.n != mul.n || upper_witness->base.edges() != mul.edges())
            throw std::invalid_argument(
                "classify: witness is not an orientation of the stated multiplication");
        DirectedMetrics dm = directed_metrics(*upper_witness);
        if (dm.strong && *dm.diameter < v.upper) {
            v.upper = *dm.diameter;
            v.upper_witness = witness_id;
        }
    }
    if (lower_cert && lower_cert->value > v.lower) {
        v.lower = lower_cert->value;
        v.lower_kind = lower_cert->kind;
    }
    if (v.lower > v.upper)
        throw std::logic_error("classify: certified lower bound exceeds witnessed upper bound");
    if (v.lower == v.upper) v.class_index = v.lower - v.base_diameter;
    return v;
}

namespace {

// Exact arc-pattern test for one gadget between base vertices (s = 2 each).
bool matches_gadget(const Orientation& d, const MulSpec& spec, GadgetKind k, int u, int v) {
    auto id = [&](int c, int b) { return spec.id(c, b); };
    auto a = [&](int c1, int b1, int c2, int b2) { return d.has_arc(id(c1, b1), id(c2, b2)); };
    switch (k) {
        case GadgetKind::Parallel:
            return a(0, u, 0, v) && a(0, u, 1, v) && a(1, u, 0, v) && a(1, u, 1, v);
        case GadgetKind::Cyclic:
            return a(0, u, 0, v) && a(0, v, 1, u) && a(1, u, 1, v) && a(1, v, 0, u);
        case GadgetKind::Twohead1:
            return a(1, v, 0, u) && a(1, v, 1, u) && a(0, u, 0, v) && a(1, u, 0, v);
        case GadgetKind::Twohead2:
            return a(0, v, 0, u) && a(0, v, 1, u) && a(0, u, 1, v) && a(1, u, 1, v);
    }
    return false;
}

bool cyclic_either_way(const Orientation& d, const MulSpec& spec, int u, int v) {
    return matches_gadget(d, spec, GadgetKind::Cyclic, u, v) ||
           matches_gadget(d, spec, GadgetKind::Cyclic, v, u);
}

Graph parent_of(const MulSpec& spec, const Graph& mul) {
    // Recover the parent adjacency from the multiplied one.
    std::vector<std::pair<int, int>> e;
    for (auto [x, y] : mul.edges()) {
        int u = spec.base_of(x), v = spec.base_of(y);
        if (spec.copy_of(x) == 0 && spec.copy_of(y) == 0) e.emplace_back(u, v);
    }
    return make_graph(spec.base_n(), e);
}

}  // namespace

ForcedForm forced_hub_form(const Orientation& d, const MulSpec& spec, int u0, int u1, int u2) {
    Graph parent = parent_of(spec, d.base);
    if (!parent.has_edge(u0, u1) || !parent.has_edge(u1, u2) || parent.has_edge(u0, u2))
        throw std::invalid_argument("forced_hub_form: u0 u1 u2 is not an induced 2-path");
    int common = 0;
    for (int w : parent.adj[u0]) common += parent.has_edge(w, u2) ? 1 : 0;
    if (common != 1)
        throw std::invalid_argument("forced_hub_form: the u0-u2 path through u1 is not unique");
    for (int v : {u0, u1, u2})
        if (spec.s[v] != 2)
            throw std::invalid_argument("forced_hub_form: multiplicities on the path must be 2");

    for (int p = 0; p < 2; ++p) {
        auto fwd = directed_bfs(d, spec.id(p, u0));
        auto bwd = directed_bfs(d, spec.id(p, u2));
        for (int q = 0; q < 2; ++q) {
            if (fwd[spec.id(q, u2)] != 2) return ForcedForm::NotForced;
            if (bwd[spec.id(q, u0)] != 2) return ForcedForm::NotForced;
        }
    }
    bool hub1 = matches_gadget(d, spec, GadgetKind::Twohead1, u0, u1) &&
                matches_gadget(d, spec, GadgetKind::Twohead2, u2, u1);
    bool hub2 = matches_gadget(d, spec, GadgetKind::Twohead2, u0, u1) &&
                matches_gadget(d, spec, GadgetKind::Twohead1, u2, u1);
    if (hub1 == hub2)
        throw std::logic_error("forced_hub_form: distance hypothesis held but no unique hub form");
    return hub1 ? ForcedForm::Hub1 : ForcedForm::Hub2;
}

int certified_path_distance(const Orientation& d, const MulSpec& spec,
                            std::span<const int> path, int gadget_pos) {
    int k = static_cast<int>(path.size()) - 1;
    if (k < 2) throw std::invalid_argument("certified_path_distance: path must have length >= 2");
    if (gadget_pos < 0 || gadget_pos > k - 2)
        throw std::invalid_argument("certified_path_distance: gadget position out of range");
    Graph parent = parent_of(spec, d.base);
    for (int j = 0; j + 1 <= k; ++j)
        if (!parent.has_edge(path[j], path[j + 1]))
            throw std::invalid_argument("certified_path_distance: not a path in the base graph");
    if (bfs_dist(parent, path[0])[path[k]] != k)
        throw std::invalid_argument("certified_path_distance: path is not shortest");

    if (!matches_gadget(d, spec, GadgetKind::Twohead1, path[gadget_pos], path[gadget_pos + 1]) ||
        !matches_gadget(d, spec, GadgetKind::Twohead2, path[gadget_pos + 2], path[gadget_pos + 1]))
        throw std::invalid_argument("certified_path_distance: two-head pair condition fails");
    for (int j = 0; j + 1 <= k; ++j) {
        if (j == gadget_pos || j == gadget_pos + 1) continue;
        if (!cyclic_either_way(d, spec, path[j], path[j + 1]))
            throw std::invalid_argument("certified_path_distance: chain condition fails at step " +
                                        std::to_string(j));
    }

    for (int p = 0; p < 2; ++p) {
        auto fwd = directed_bfs(d, spec.id(p, path[0]));
        auto bwd = directed_bfs(d, spec.id(p, path[k]));
        for (int q = 0; q < 2; ++q) {
            if (fwd[spec.id(q, path[k])] != k || bwd[spec.id(q, path[0])] != k)
                throw std::logic_error("certified_path_distance: BFS contradicts the certified bound");
        }
    }
    return k;
}

DominationResult outset_domination(const Orientation& d, std::span<const int> block,
                                   std::span<const int> sources) {
    for (int s : sources)
        for (int b : block)
            if (!d.base.has_edge(s, b))
                throw std::invalid_argument(
                    "outset_domination: a source is not adjacent to the whole block");
    if (block.size() > 64)
        throw std::invalid_argument("outset_domination: block too large for a 64-bit mask");

    std::vector<std::uint64_t> outset(sources.size(), 0);
    for (std::size_t i = 0; i < sources.size(); ++i)
        for (std::size_t j = 0; j < block.size(); ++j)
            if (d.has_arc(sources[i], block[j])) outset[i] |= std::uint64_t{1} << j;

    for (std::size_t i = 0; i < sources.size(); ++i)
        for (std::size_t j = 0; j < sources.size(); ++j) {
            if (i == j) continue;
            if ((outset[i] & ~outset[j]) == 0) return {true, sources[i], sources[j]};
        }
    return {};
}

ForcingOutcome forcing_lower_bound_p3p2(const Graph& p3p2, const MulSpec& spec,
                                        const SearchBudget& budget) {
    // The base must be the 3x2 grid under its row-major labelling.
    Graph reference = cartesian_product(build_family(Family::Path, 3),
                                        build_family(Family::Path, 2));
    if (p3p2.n != reference.n || p3p2.edges() != reference.edges())
        throw std::invalid_argument("forcing_lower_bound_p3p2: base is not the 3x2 grid");
    auto pv = [](int i, int j) { return 2 * i + j; };

    const int mid_bottom = pv(1, 0), mid_top = pv(1, 1);
    std::vector<int> corners = {pv(0, 0), pv(0, 1), pv(2, 0), pv(2, 1)};
    for (int v : corners)
        if (spec.s[v] < 2)
            throw std::invalid_argument("forcing_lower_bound_p3p2: corner multiplicities must be >= 2");
    bool bottom_free = spec.s[mid_bottom] == 2;
    bool top_free = spec.s[mid_top] == 2;
    if (!bottom_free && !top_free)
        throw std::invalid_argument(
            "forcing_lower_bound_p3p2: at least one middle multiplicity must be 2");
    if ((!bottom_free || !top_free)) {
        // One enlarged middle is only supported with plain corners.
        for (int v : corners)
            if (spec.s[v] != 2)
                throw std::invalid_argument(
                    "forcing_lower_bound_p3p2: enlarged middle requires multiplicity-2 corners");
    }

    auto [mul, mul_spec] = vertex_multiplication(p3p2, spec.s);

    // Under any diameter-3 orientation the copies of the two rail ends sit at
    // directed distance exactly 2 both ways (they share a bipartition class),
    // so each rail with a multiplicity-2 middle collapses to one of two hub
    // forms. Enumerate those forms explicitly and exhaust the rest.
    Bipartition parts = bipartition(mul);
    if (!parts.bipartite)
        throw std::logic_error("forcing_lower_bound_p3p2: multiplication is not bipartite");
    auto same_class = [&](int a, int b) {
        return parts.color[mul_spec.id(0, a)] == parts.color[mul_spec.id(0, b)];
    };
    if (!same_class(pv(0, 0), pv(2, 0)) || !same_class(pv(0, 1), pv(2, 1)))
        throw std::logic_error("forcing_lower_bound_p3p2: rail ends not in one bipartition class");

    struct Rail {
        int c0, mid, c2;
    };
    std::vector<Rail> rails;
    if (top_free) rails.push_back({pv(0, 1), mid_top, pv(2, 1)});
    if (bottom_free) rails.push_back({pv(0, 0), mid_bottom, pv(2, 0)});

    ForcingOutcome out;
    out.cases = 1 << rails.size();
    for (int mask = 0; mask < out.cases; ++mask) {
        std::vector<std::pair<int, int>> fixed;
        for (std::size_t r = 0; r < rails.size(); ++r) {
            int hub = (mask >> r) & 1;
            const Rail& rail = rails[r];
            for (int p = 0; p < spec.s[rail.c0]; ++p) {
                fixed.emplace_back(mul_spec.id(p, rail.c0), mul_spec.id(hub, rail.mid));
                fixed.emplace_back(mul_spec.id(1 - hub, rail.mid), mul_spec.id(p, rail.c0));
            }
            for (int q = 0; q < spec.s[rail.c2]; ++q) {
                fixed.emplace_back(mul_spec.id(hub, rail.mid), mul_spec.id(q, rail.c2));
                fixed.emplace_back(mul_spec.id(q, rail.c2), mul_spec.id(1 - hub, rail.mid));
            }
        }
        SearchBudget case_budget = budget;
        case_budget.symmetry = false;
        RefuteResult res = refute_diameter(mul, 3, fixed, case_budget);
        out.case_stats.push_back(res.stats);
        out.total_nodes += res.stats.nodes;
        if (res.outcome == RefuteOutcome::Witness) return out;  // refuted = false
        if (res.outcome == RefuteOutcome::BudgetExhausted) {
            out.inconclusive = true;
            return out;
        }
    }
    out.refuted = true;
    return out;
}

}  // namespace orientlab
