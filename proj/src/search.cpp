#include "orientlab/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace orientlab {

namespace {

// Partial orientation over a <=64-vertex graph. Unassigned edges count as
// two-way; assigned ones contribute to fixed_out/fixed_in only.
struct BitState {
    int n = 0;
    std::uint64_t full = 0;
    std::array<std::uint64_t, 64> fixed_out{}, fixed_in{}, free_adj{};

    std::uint64_t relaxed_out(int v) const { return fixed_out[v] | free_adj[v]; }

    void assign(int from, int to) {
        free_adj[from] &= ~(std::uint64_t{1} << to);
        free_adj[to] &= ~(std::uint64_t{1} << from);
        fixed_out[from] |= std::uint64_t{1} << to;
        fixed_in[to] |= std::uint64_t{1} << from;
    }

    bool settled(int v) const { return free_adj[v] == 0; }

    // Does every vertex reach every other within k steps, free edges relaxed?
    bool within(int k) const {
        for (int s = 0; s < n; ++s) {
            std::uint64_t reach = std::uint64_t{1} << s;
            std::uint64_t frontier = reach;
            for (int step = 0; step < k && reach != full; ++step) {
                std::uint64_t next = 0;
                std::uint64_t f = frontier;
                while (f) {
                    int v = std::countr_zero(f);
                    f &= f - 1;
                    next |= relaxed_out(v);
                }
                frontier = next & ~reach;
                if (!frontier) break;
                reach |= frontier;
            }
            if (reach != full) return false;
        }
        return true;
    }
};

struct Searcher {
    const Graph& g;
    int k;
    const SearchBudget& budget;
    SearchStats stats{};
    std::vector<std::pair<int, int>> order{};  // branch order (betweenness desc)
    std::optional<Orientation> witness{};
    bool skip_reversed_root = false;

    bool over_budget() const { return stats.nodes > budget.max_nodes; }

    bool feasible(BitState& st) {
        for (int v = 0; v < st.n; ++v) {
            if (st.settled(v) && (st.fixed_out[v] == 0 || st.fixed_in[v] == 0)) {
                ++stats.pruned_dead_vertex;
                return false;
            }
        }
        if (!st.within(k)) {
            ++stats.pruned_distance;
            return false;
        }
        return true;
    }

    // Fix every arc whose reversal is infeasible. Returns false on a dead end.
    bool propagate(BitState& st, int& next_free) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = next_free; i < order.size(); ++i) {
                auto [u, v] = order[i];
                if (!(st.free_adj[u] >> v & 1)) continue;
                BitState fwd = st;
                fwd.assign(u, v);
                bool ok_fwd = feasible(fwd);
                BitState bwd = st;
                bwd.assign(v, u);
                bool ok_bwd = feasible(bwd);
                if (!ok_fwd && !ok_bwd) return false;
                if (ok_fwd != ok_bwd) {
                    st = ok_fwd ? fwd : bwd;
                    ++stats.forced_arcs;
                    changed = true;
                }
            }
        }
        while (next_free < static_cast<int>(order.size())) {
            auto [u, v] = order[next_free];
            if (st.free_adj[u] >> v & 1) break;
            ++next_free;
        }
        return true;
    }

    // Returns true when a witness has been found (stop unwinding).
    bool dfs(BitState st, int next_free, int depth) {
        if (over_budget()) return false;
        ++stats.nodes;
        if (!feasible(st)) return false;
        if (budget.propagate && !propagate(st, next_free)) return false;

        while (next_free < static_cast<int>(order.size())) {
            auto [u, v] = order[next_free];
            if (st.free_adj[u] >> v & 1) break;
            ++next_free;
        }
        if (next_free == static_cast<int>(order.size())) {
            // Total orientation; certify by exact directed BFS.
            std::vector<std::pair<int, int>> arcs;
            for (int u = 0; u < g.n; ++u) {
                std::uint64_t o = st.fixed_out[u];
                while (o) {
                    int v = std::countr_zero(o);
                    o &= o - 1;
                    arcs.emplace_back(u, v);
                }
            }
            Orientation d = orientation_from_arcs(g, arcs);
            DirectedMetrics dm = directed_metrics(d);
            if (dm.strong && *dm.diameter <= k) {
                witness = std::move(d);
                return true;
            }
            return false;  // relaxed bound was loose; keep searching
        }

        auto [u, v] = order[next_free];
        BitState fwd = st;
        fwd.assign(u, v);
        if (dfs(std::move(fwd), next_free + 1, depth + 1)) return true;
        if (depth == 0 && skip_reversed_root && next_free == 0) {
            stats.root_symmetry_used = true;
            return false;
        }
        BitState bwd = std::move(st);
        bwd.assign(v, u);
        return dfs(std::move(bwd), next_free + 1, depth + 1);
    }
};

}  // namespace

std::vector<double> edge_betweenness(const Graph& g) {
    auto edge_list = g.edges();
    std::vector<double> score(edge_list.size(), 0.0);
    auto index = [&](int u, int v) {
        auto key = std::minmax(u, v);
        return static_cast<std::size_t>(
            std::lower_bound(edge_list.begin(), edge_list.end(),
                             std::pair<int, int>{key.first, key.second}) -
            edge_list.begin());
    };
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> dist(g.n, -1), seq;
        std::vector<double> sigma(g.n, 0.0), delta(g.n, 0.0);
        dist[s] = 0;
        sigma[s] = 1.0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            seq.push_back(u);
            for (int v : g.adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
                if (dist[v] == dist[u] + 1) sigma[v] += sigma[u];
            }
        }
        for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
            int w = *it;
            for (int u : g.adj[w]) {
                if (dist[u] + 1 != dist[w]) continue;
                double c = sigma[u] / sigma[w] * (1.0 + delta[w]);
                delta[u] += c;
                score[index(u, w)] += c;
            }
        }
    }
    return score;
}

std::vector<std::vector<int>> automorphisms(const Graph& g, std::size_t max_count) {
    std::vector<std::vector<int>> found;
    std::vector<int> perm(g.n, -1);
    std::vector<char> used(g.n, 0);
    auto consistent = [&](int v, int image) {
        if (g.degree(v) != g.degree(image)) return false;
        for (int w : g.adj[v])
            if (perm[w] >= 0 && !g.has_edge(image, perm[w])) return false;
        // Non-neighbors mapped so far must stay non-neighbors.
        for (int w = 0; w < g.n; ++w)
            if (perm[w] >= 0 && !g.has_edge(v, w) && v != w && g.has_edge(image, perm[w]))
                return false;
        return true;
    };
    auto rec = [&](auto&& self, int v) -> void {
        if (found.size() >= max_count) return;
        if (v == g.n) {
            found.push_back(perm);
            return;
        }
        for (int image = 0; image < g.n; ++image) {
            if (used[image] || !consistent(v, image)) continue;
            perm[v] = image;
            used[image] = 1;
            self(self, v + 1);
            perm[v] = -1;
            used[image] = 0;
            if (found.size() >= max_count) return;
        }
    };
    rec(rec, 0);
    return found;
}

RefuteResult refute_diameter(const Graph& g, int k,
                             std::span<const std::pair<int, int>> fixed,
                             const SearchBudget& budget) {
    if (g.n > 64) throw std::invalid_argument("refute_diameter: at most 64 vertices supported");
    if (!is_connected(g)) throw std::invalid_argument("refute_diameter: graph is disconnected");
    if (!bridges(g).empty())
        throw std::invalid_argument("refute_diameter: bridged input, no strong orientation exists");
    if (k < 1) throw std::invalid_argument("refute_diameter: k must be >= 1");

    BitState st;
    st.n = g.n;
    st.full = g.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) st.free_adj[u] |= std::uint64_t{1} << v;

    for (auto [u, v] : fixed) {
        if (u < 0 || u >= g.n || v < 0 || v >= g.n || !g.has_edge(u, v))
            throw std::invalid_argument("refute_diameter: fixed arc is not an edge");
        if (st.fixed_out[u] >> v & 1) continue;
        if (st.fixed_out[v] >> u & 1)
            throw std::invalid_argument("refute_diameter: inconsistent fixed arcs");
        st.assign(u, v);
    }

    // Branch on central edges first.
    auto edge_list = g.edges();
    auto bc = edge_betweenness(g);
    std::vector<std::size_t> idx(edge_list.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return bc[a] > bc[b];
    });

    Searcher s{g, k, budget};
    for (std::size_t i : idx) {
        auto [u, v] = edge_list[i];
        if (!(st.fixed_out[u] >> v & 1) && !(st.fixed_out[v] >> u & 1))
            s.order.emplace_back(u, v);
    }

    if (budget.symmetry && fixed.empty() && !s.order.empty()) {
        auto [u, v] = s.order.front();
        for (const auto& phi : automorphisms(g)) {
            if (phi[u] == v && phi[v] == u) {
                s.skip_reversed_root = true;
                break;
            }
        }
    }

    RefuteResult result;
    bool found = s.dfs(std::move(st), 0, 0);
    result.stats = s.stats;
    if (found) {
        result.outcome = RefuteOutcome::Witness;
        result.witness = std::move(s.witness);
    } else if (s.over_budget()) {
        result.outcome = RefuteOutcome::BudgetExhausted;
        result.stats.budget_exhausted = true;
    } else {
        result.outcome = RefuteOutcome::Refuted;
    }
    return result;
}

OrientationNumber orientation_number(const Graph& g, const SearchBudget& budget) {
    OrientationNumber r;
    int start = std::max(1, metrics(g).diameter);
    r.lower = start;
    for (int k = start; k < std::max(2, g.n); ++k) {
        RefuteResult step = refute_diameter(g, k, {}, budget);
        r.stats.nodes += step.stats.nodes;
        r.stats.pruned_distance += step.stats.pruned_distance;
        r.stats.pruned_dead_vertex += step.stats.pruned_dead_vertex;
        r.stats.forced_arcs += step.stats.forced_arcs;
        r.stats.root_symmetry_used |= step.stats.root_symmetry_used;
        if (step.outcome == RefuteOutcome::Witness) {
            r.exact = true;
            r.lower = k;
            r.upper = k;
            r.witness = std::move(step.witness);
            return r;
        }
        if (step.outcome == RefuteOutcome::BudgetExhausted) {
            r.stats.budget_exhausted = true;
            r.lower = k;  // levels below k are certified impossible
            return r;
        }
        r.lower = k + 1;
    }
    throw std::logic_error("orientation_number: no strong orientation found below order bound");
}

}  // namespace orientlab
