#include "orientlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace orientlab {

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_count() const {
    std::size_t deg_sum = 0;
    for (const auto& a : adj) deg_sum += a.size();
    return static_cast<int>(deg_sum / 2);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph make_graph(int n, std::span<const std::pair<int, int>> edge_list,
                 std::vector<std::string> labels) {
    if (n < 0) throw std::invalid_argument("make_graph: negative order");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("make_graph: label count mismatch");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    g.labels = std::move(labels);
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("make_graph: vertex out of range");
        if (u == v) throw std::invalid_argument("make_graph: self-loop");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw std::invalid_argument("make_graph: parallel edge");
    }
    return g;
}

Graph build_family(Family f, int size) {
    std::vector<std::pair<int, int>> e;
    switch (f) {
        case Family::Path:
            if (size < 1) throw std::invalid_argument("path: order must be >= 1");
            for (int i = 0; i + 1 < size; ++i) e.emplace_back(i, i + 1);
            return make_graph(size, e);
        case Family::Cycle:
            if (size < 3) throw std::invalid_argument("cycle: order must be >= 3");
            for (int i = 0; i + 1 < size; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(size - 1, 0);
            return make_graph(size, e);
        case Family::Complete:
            if (size < 1) throw std::invalid_argument("complete: order must be >= 1");
            for (int i = 0; i < size; ++i)
                for (int j = i + 1; j < size; ++j) e.emplace_back(i, j);
            return make_graph(size, e);
        case Family::Hypercube: {
            if (size < 1) throw std::invalid_argument("hypercube: exponent must be >= 1");
            if (size > 20) throw std::invalid_argument("hypercube: exponent too large");
            int n = 1 << size;
            for (int v = 0; v < n; ++v)
                for (int b = 0; b < size; ++b)
                    if (v < (v ^ (1 << b))) e.emplace_back(v, v ^ (1 << b));
            return make_graph(n, e);
        }
        case Family::Star:
            if (size < 1) throw std::invalid_argument("star: leaf count must be >= 1");
            for (int i = 1; i <= size; ++i) e.emplace_back(0, i);
            return make_graph(size + 1, e);
    }
    throw std::invalid_argument("build_family: unknown family");
}

std::optional<Family> family_from_string(const std::string& s) {
    if (s == "path") return Family::Path;
    if (s == "cycle") return Family::Cycle;
    if (s == "complete") return Family::Complete;
    if (s == "hypercube") return Family::Hypercube;
    if (s == "star") return Family::Star;
    return std::nullopt;
}

Graph parse_tree(std::span<const int> parents) {
    int n = static_cast<int>(parents.size());
    if (n < 1) throw std::invalid_argument("parse_tree: empty input");
    int root = -1;
    for (int i = 0; i < n; ++i) {
        if (parents[i] == 0) {
            if (root >= 0) throw std::invalid_argument("parse_tree: disconnected input (two roots)");
            root = i;
        } else if (parents[i] < 1 || parents[i] > n) {
            throw std::invalid_argument("parse_tree: parent index out of range");
        } else if (parents[i] - 1 == i) {
            throw std::invalid_argument("parse_tree: cycle detected (self-parent)");
        }
    }
    if (root < 0) throw std::invalid_argument("parse_tree: no root (cycle detected)");
    // Every vertex must reach the root through parent links.
    std::vector<int> state(n, 0);  // 0 unseen, 1 on current chain, 2 done
    state[root] = 2;
    for (int i = 0; i < n; ++i) {
        std::vector<int> chain;
        int v = i;
        while (state[v] == 0) {
            state[v] = 1;
            chain.push_back(v);
            v = parents[v] - 1;
        }
        if (state[v] == 1) throw std::invalid_argument("parse_tree: cycle detected");
        for (int c : chain) state[c] = 2;
    }
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        if (i != root) e.emplace_back(parents[i] - 1, i);
    return make_graph(n, e);
}

bool is_tree(const Graph& g) {
    return g.n >= 1 && g.edge_count() == g.n - 1 && is_connected(g);
}

std::vector<int> bfs_dist(const Graph& g, int src) {
    std::vector<int> dist(g.n, -1);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : g.adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    auto d = bfs_dist(g, 0);
    return std::find(d.begin(), d.end(), -1) == d.end();
}

Metrics metrics(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("metrics: empty graph");
    Metrics m;
    m.dist.resize(g.n);
    m.ecc.resize(g.n);
    for (int v = 0; v < g.n; ++v) {
        m.dist[v] = bfs_dist(g, v);
        auto it = std::find(m.dist[v].begin(), m.dist[v].end(), -1);
        if (it != m.dist[v].end()) {
            int w = static_cast<int>(it - m.dist[v].begin());
            throw std::invalid_argument("metrics: disconnected graph, no path between vertices " +
                                        std::to_string(v + 1) + " and " + std::to_string(w + 1));
        }
        m.ecc[v] = *std::max_element(m.dist[v].begin(), m.dist[v].end());
    }
    m.diameter = *std::max_element(m.ecc.begin(), m.ecc.end());
    m.radius = *std::min_element(m.ecc.begin(), m.ecc.end());
    return m;
}

std::vector<int> Bipartition::side(int c) const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(color.size()); ++v)
        if (color[v] == c) out.push_back(v);
    return out;
}

Bipartition bipartition(const Graph& g) {
    Bipartition b;
    b.color.assign(g.n, -1);
    std::vector<int> parent(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (b.color[s] >= 0) continue;
        b.color[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : g.adj[u]) {
                if (b.color[v] < 0) {
                    b.color[v] = 1 - b.color[u];
                    parent[v] = u;
                    q.push_back(v);
                } else if (b.color[v] == b.color[u]) {
                    // Odd cycle: join the two BFS-tree paths u<-...<-r and v<-...<-r.
                    std::vector<int> pu{u}, pv{v};
                    auto root_path = [&](std::vector<int>& p) {
                        while (parent[p.back()] >= 0) p.push_back(parent[p.back()]);
                    };
                    root_path(pu);
                    root_path(pv);
                    while (pu.size() > 1 && pv.size() > 1 &&
                           pu[pu.size() - 2] == pv[pv.size() - 2]) {
                        pu.pop_back();
                        pv.pop_back();
                    }
                    b.odd_cycle = pu;
                    for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it)
                        b.odd_cycle.push_back(*it);
                    b.bipartite = false;
                    return b;
                }
            }
        }
    }
    b.bipartite = true;
    return b;
}

std::vector<std::pair<int, int>> bridges(const Graph& g) {
    // Iterative low-link DFS.
    std::vector<int> num(g.n, -1), low(g.n, 0), parent(g.n, -1), it(g.n, 0);
    std::vector<std::pair<int, int>> out;
    int counter = 0;
    for (int s = 0; s < g.n; ++s) {
        if (num[s] >= 0) continue;
        std::vector<int> stack{s};
        num[s] = low[s] = counter++;
        while (!stack.empty()) {
            int u = stack.back();
            if (it[u] < static_cast<int>(g.adj[u].size())) {
                int v = g.adj[u][it[u]++];
                if (num[v] < 0) {
                    parent[v] = u;
                    num[v] = low[v] = counter++;
                    stack.push_back(v);
                } else if (v != parent[u]) {
                    low[u] = std::min(low[u], num[v]);
                }
            } else {
                stack.pop_back();
                if (int p = parent[u]; p >= 0) {
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] > num[p]) out.emplace_back(std::min(p, u), std::max(p, u));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.n == 0 || h.n == 0) throw std::invalid_argument("cartesian_product: empty factor");
    int n = g.n * h.n;
    std::vector<std::pair<int, int>> e;
    auto id = [&](int u, int x) { return u * h.n + x; };
    for (int u = 0; u < g.n; ++u)
        for (auto [x, y] : h.edges()) e.emplace_back(id(u, x), id(u, y));
    for (auto [u, v] : g.edges())
        for (int x = 0; x < h.n; ++x) e.emplace_back(id(u, x), id(v, x));
    std::vector<std::string> labels(n);
    for (int u = 0; u < g.n; ++u)
        for (int x = 0; x < h.n; ++x)
            labels[id(u, x)] =
                "<" + std::to_string(u + 1) + "," + std::to_string(x + 1) + ">";
    return make_graph(n, e, std::move(labels));
}

int MulSpec::base_of(int flat) const {
    auto it = std::upper_bound(offset.begin(), offset.end(), flat);
    return static_cast<int>(it - offset.begin()) - 1;
}

std::pair<Graph, MulSpec> vertex_multiplication(const Graph& g, std::span<const int> s) {
    if (static_cast<int>(s.size()) != g.n)
        throw std::invalid_argument("vertex_multiplication: multiplicity vector length mismatch");
    MulSpec spec;
    spec.s.assign(s.begin(), s.end());
    spec.offset.assign(g.n + 1, 0);
    for (int i = 0; i < g.n; ++i) {
        if (s[i] < 1) throw std::invalid_argument("vertex_multiplication: multiplicity must be >= 1");
        spec.offset[i + 1] = spec.offset[i] + s[i];
    }
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges())
        for (int x = 0; x < s[u]; ++x)
            for (int y = 0; y < s[v]; ++y) e.emplace_back(spec.id(x, u), spec.id(y, v));
    std::vector<std::string> labels(spec.total());
    for (int v = 0; v < g.n; ++v) {
        std::string base_tag =
            g.labels.empty() ? std::to_string(v + 1) : g.labels[v];
        for (int x = 0; x < s[v]; ++x)
            labels[spec.id(x, v)] = "(" + std::to_string(x + 1) + "," + base_tag + ")";
    }
    return {make_graph(spec.total(), e, std::move(labels)), spec};
}

}  // namespace orientlab
