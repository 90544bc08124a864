#include "orientlab/orientation.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace orientlab {

namespace {

std::string vname(const Graph& g, int v) {
    return g.labels.empty() ? std::to_string(v + 1) : g.labels[v];
}

}  // namespace

bool Orientation::has_arc(int u, int v) const {
    const auto& o = out[u];
    return std::binary_search(o.begin(), o.end(), v);
}

int Orientation::arc_count() const {
    std::size_t total = 0;
    for (const auto& o : out) total += o.size();
    return static_cast<int>(total);
}

std::vector<std::pair<int, int>> Orientation::arcs() const {
    std::vector<std::pair<int, int>> a;
    a.reserve(arc_count());
    for (int u = 0; u < base.n; ++u)
        for (int v : out[u]) a.emplace_back(u, v);
    return a;
}

Orientation reverse(const Orientation& d) {
    Orientation r;
    r.base = d.base;
    r.out = d.in;
    r.in = d.out;
    return r;
}

std::vector<int> directed_bfs(const Orientation& d, int src) {
    std::vector<int> dist(d.base.n, -1);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : d.out[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
    }
    return dist;
}

DirectedMetrics directed_metrics(const Orientation& d) {
    DirectedMetrics m;
    m.dist.resize(d.base.n);
    m.strong = true;
    int diam = 0;
    for (int v = 0; v < d.base.n; ++v) {
        m.dist[v] = directed_bfs(d, v);
        for (int x : m.dist[v]) {
            if (x < 0)
                m.strong = false;
            else
                diam = std::max(diam, x);
        }
    }
    if (m.strong) m.diameter = diam;
    return m;
}

int min_cycle_per_vertex(const Orientation& d) {
    DirectedMetrics m = directed_metrics(d);
    if (!m.strong) throw std::invalid_argument("min_cycle_per_vertex: orientation is not strong");
    int worst = 0;
    for (int v = 0; v < d.base.n; ++v) {
        int best = -1;
        for (int w : d.out[v]) {
            int back = m.dist[w][v];
            if (back >= 0 && (best < 0 || back + 1 < best)) best = back + 1;
        }
        if (best < 0) throw std::logic_error("min_cycle_per_vertex: strong digraph without cycle");
        worst = std::max(worst, best);
    }
    return worst;
}

int lift_bound(const Orientation& d, int m) {
    int cyc = min_cycle_per_vertex(d);
    if (cyc > m)
        throw std::invalid_argument("lift_bound: cycle bound violated (" + std::to_string(cyc) +
                                    " > " + std::to_string(m) + ")");
    DirectedMetrics dm = directed_metrics(d);
    return std::max(m, *dm.diameter);
}

std::string gadget_name(GadgetKind k) {
    switch (k) {
        case GadgetKind::Parallel: return "parallel";
        case GadgetKind::Cyclic: return "cyclic";
        case GadgetKind::Twohead1: return "twohead1";
        case GadgetKind::Twohead2: return "twohead2";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// MulOrientationBuilder

MulOrientationBuilder::MulOrientationBuilder(Graph multiplied, MulSpec spec)
    : g_(std::move(multiplied)), spec_(std::move(spec)) {
    if (g_.n != spec_.total())
        throw std::invalid_argument("MulOrientationBuilder: graph/spec size mismatch");
    flat_edges_ = g_.edges();
    dir_.assign(flat_edges_.size(), -1);

    // Base edges recovered from flat adjacency; every flat edge must join
    // copies of two adjacent base vertices.
    std::vector<std::pair<int, int>> seen;
    for (auto [u, v] : flat_edges_) {
        int bu = spec_.base_of(u), bv = spec_.base_of(v);
        if (bu == bv) throw std::invalid_argument("MulOrientationBuilder: edge inside a copy block");
        seen.emplace_back(std::min(bu, bv), std::max(bu, bv));
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    base_edges_ = std::move(seen);
    base_edge_remaining_.assign(base_edges_.size(), 0);
    base_logged_.assign(base_edges_.size(), 0);
    for (auto [u, v] : flat_edges_) {
        int bu = spec_.base_of(u), bv = spec_.base_of(v);
        ++base_edge_remaining_[base_edge_index(bu, bv)];
    }
}

int MulOrientationBuilder::flat_edge_index(int u, int v) const {
    auto key = std::minmax(u, v);
    auto it = std::lower_bound(flat_edges_.begin(), flat_edges_.end(),
                               std::pair<int, int>{key.first, key.second});
    if (it == flat_edges_.end() || *it != std::pair<int, int>{key.first, key.second})
        return -1;
    return static_cast<int>(it - flat_edges_.begin());
}

int MulOrientationBuilder::base_edge_index(int u, int v) const {
    auto key = std::minmax(u, v);
    auto it = std::lower_bound(base_edges_.begin(), base_edges_.end(),
                               std::pair<int, int>{key.first, key.second});
    if (it == base_edges_.end() || *it != std::pair<int, int>{key.first, key.second})
        return -1;
    return static_cast<int>(it - base_edges_.begin());
}

bool MulOrientationBuilder::base_edge_oriented(int base_u, int base_v) const {
    int idx = base_edge_index(base_u, base_v);
    if (idx < 0) throw std::invalid_argument("base_edge_oriented: edge absent in parent graph");
    return base_edge_remaining_[idx] == 0;
}

void MulOrientationBuilder::set_arc(int from, int to) {
    int idx = flat_edge_index(from, to);
    if (idx < 0)
        throw std::invalid_argument("orientation rule touches a non-edge " + vname(g_, from) +
                                    "-" + vname(g_, to));
    signed char want = (from < to) ? 0 : 1;
    if (dir_[idx] != -1)
        throw std::logic_error("orientation rule overlap on edge " + vname(g_, from) + "-" +
                               vname(g_, to));
    dir_[idx] = want;
    int b = base_edge_index(spec_.base_of(from), spec_.base_of(to));
    --base_edge_remaining_[b];
}

void MulOrientationBuilder::apply_gadget_arcs(GadgetKind k, int u, int v) {
    auto id = [&](int copy, int base) { return spec_.id(copy, base); };
    switch (k) {
        case GadgetKind::Parallel:
            // Every copy of u beats every copy of v; any multiplicities.
            for (int x = 0; x < spec_.s[u]; ++x)
                for (int y = 0; y < spec_.s[v]; ++y) set_arc(id(x, u), id(y, v));
            return;
        case GadgetKind::Cyclic:
            // (1,u)->(1,v)->(2,u)->(2,v)->(1,u)
            set_arc(id(0, u), id(0, v));
            set_arc(id(0, v), id(1, u));
            set_arc(id(1, u), id(1, v));
            set_arc(id(1, v), id(0, u));
            return;
        case GadgetKind::Twohead1:
            // (2,v) -> {(1,u),(2,u)} -> (1,v)
            set_arc(id(1, v), id(0, u));
            set_arc(id(1, v), id(1, u));
            set_arc(id(0, u), id(0, v));
            set_arc(id(1, u), id(0, v));
            return;
        case GadgetKind::Twohead2:
            // (1,v) -> {(1,u),(2,u)} -> (2,v)
            set_arc(id(0, v), id(0, u));
            set_arc(id(0, v), id(1, u));
            set_arc(id(0, u), id(1, v));
            set_arc(id(1, u), id(1, v));
            return;
    }
}

void MulOrientationBuilder::gadget(GadgetKind k, int base_u, int base_v) {
    int idx = base_edge_index(base_u, base_v);
    if (idx < 0) throw std::invalid_argument("gadget: base edge absent");
    if (k != GadgetKind::Parallel && (spec_.s[base_u] != 2 || spec_.s[base_v] != 2))
        throw std::invalid_argument("gadget: " + gadget_name(k) +
                                    " requires multiplicity 2 on both endpoints");
    int expect = spec_.s[base_u] * spec_.s[base_v];
    if (base_edge_remaining_[idx] != expect)
        throw std::logic_error("gadget: overlapping construction rules on base edge " +
                               std::to_string(base_u + 1) + "-" + std::to_string(base_v + 1));
    apply_gadget_arcs(k, base_u, base_v);
    log_.push_back({base_u, base_v, k, false});
    base_logged_[idx] = 1;
}

bool MulOrientationBuilder::gadget_if_free(GadgetKind k, int base_u, int base_v) {
    int idx = base_edge_index(base_u, base_v);
    if (idx < 0) throw std::invalid_argument("gadget_if_free: base edge absent");
    if (base_edge_remaining_[idx] == 0) return false;
    gadget(k, base_u, base_v);
    return true;
}

void MulOrientationBuilder::arc(int copy_u, int base_u, int copy_v, int base_v) {
    set_arc(spec_.id(copy_u, base_u), spec_.id(copy_v, base_v));
    int idx = base_edge_index(base_u, base_v);
    if (!base_logged_[idx]) {
        log_.push_back({std::min(base_u, base_v), std::max(base_u, base_v), GadgetKind::Parallel,
                        true});
        base_logged_[idx] = 1;
    }
}

std::vector<std::pair<int, int>> MulOrientationBuilder::unoriented_base_edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < base_edges_.size(); ++i)
        if (base_edge_remaining_[i] > 0) out.push_back(base_edges_[i]);
    return out;
}

Orientation MulOrientationBuilder::finalize() const {
    Orientation d;
    d.base = g_;
    d.out.assign(g_.n, {});
    d.in.assign(g_.n, {});
    for (std::size_t i = 0; i < flat_edges_.size(); ++i) {
        auto [u, v] = flat_edges_[i];
        if (dir_[i] == -1)
            throw std::logic_error("finalize: edge " + vname(g_, u) + "-" + vname(g_, v) +
                                   " left unoriented");
        int from = dir_[i] == 0 ? u : v;
        int to = dir_[i] == 0 ? v : u;
        d.out[from].push_back(to);
        d.in[to].push_back(from);
    }
    for (auto& o : d.out) std::sort(o.begin(), o.end());
    for (auto& o : d.in) std::sort(o.begin(), o.end());
    return d;
}

// ---------------------------------------------------------------------------
// OrientationBuilder

OrientationBuilder::OrientationBuilder(Graph g) : g_(std::move(g)) {
    edges_ = g_.edges();
    dir_.assign(edges_.size(), -1);
}

int OrientationBuilder::edge_index(int u, int v) const {
    auto key = std::minmax(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(),
                               std::pair<int, int>{key.first, key.second});
    if (it == edges_.end() || *it != std::pair<int, int>{key.first, key.second}) return -1;
    return static_cast<int>(it - edges_.begin());
}

bool OrientationBuilder::oriented(int u, int v) const {
    int idx = edge_index(u, v);
    if (idx < 0) throw std::invalid_argument("oriented: edge absent");
    return dir_[idx] != -1;
}

void OrientationBuilder::arc(int u, int v) {
    int idx = edge_index(u, v);
    if (idx < 0)
        throw std::invalid_argument("arc: edge absent " + vname(g_, u) + "-" + vname(g_, v));
    if (dir_[idx] != -1)
        throw std::logic_error("arc: edge already oriented " + vname(g_, u) + "-" + vname(g_, v));
    dir_[idx] = (u < v) ? 0 : 1;
}

bool OrientationBuilder::arc_if_free(int u, int v) {
    int idx = edge_index(u, v);
    if (idx < 0) throw std::invalid_argument("arc_if_free: edge absent");
    if (dir_[idx] != -1) return false;
    dir_[idx] = (u < v) ? 0 : 1;
    return true;
}

Orientation OrientationBuilder::finalize() const {
    Orientation d;
    d.base = g_;
    d.out.assign(g_.n, {});
    d.in.assign(g_.n, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto [u, v] = edges_[i];
        if (dir_[i] == -1)
            throw std::logic_error("finalize: edge " + vname(g_, u) + "-" + vname(g_, v) +
                                   " left unoriented");
        int from = dir_[i] == 0 ? u : v;
        int to = dir_[i] == 0 ? v : u;
        d.out[from].push_back(to);
        d.in[to].push_back(from);
    }
    for (auto& o : d.out) std::sort(o.begin(), o.end());
    for (auto& o : d.in) std::sort(o.begin(), o.end());
    return d;
}

Orientation orientation_from_arcs(Graph g, std::span<const std::pair<int, int>> arcs) {
    OrientationBuilder b(std::move(g));
    for (auto [u, v] : arcs) b.arc(u, v);
    return b.finalize();
}

std::pair<Orientation, MulSpec> extend_multiplication(const Graph& parent, const MulSpec& from,
                                                      const Orientation& d,
                                                      std::span<const int> to) {
    if (static_cast<int>(to.size()) != parent.n)
        throw std::invalid_argument("extend_multiplication: target vector length mismatch");
    for (int v = 0; v < parent.n; ++v)
        if (to[v] < from.s[v])
            throw std::invalid_argument("extend_multiplication: target multiplicity shrinks");
    if (d.base.n != from.total())
        throw std::invalid_argument("extend_multiplication: orientation does not match spec");

    auto [big, big_spec] = vertex_multiplication(parent, to);
    // Copies beyond the source multiplicity mimic copy 0 of the same base vertex.
    auto clamp = [&](int flat) {
        int b = big_spec.base_of(flat);
        int c = big_spec.copy_of(flat);
        return from.id(c < from.s[b] ? c : 0, b);
    };
    OrientationBuilder builder(big);
    for (auto [u, v] : big.edges()) {
        if (d.has_arc(clamp(u), clamp(v)))
            builder.arc(u, v);
        else
            builder.arc(v, u);
    }
    return {builder.finalize(), big_spec};
}

}  // namespace orientlab
