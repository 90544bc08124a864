#ifndef ORIENTLAB_GRAPH_HPP
#define ORIENTLAB_GRAPH_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace orientlab {

// Simple undirected graph: no loops, no parallel edges.
// Vertices are 0-based ints; text I/O is 1-based (see io.hpp).
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;  // sorted, duplicate-free neighbor lists
    std::vector<std::string> labels;    // empty, or one tag per vertex

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int edge_count() const;
    // All edges as (u,v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;
};

// Validates vertex range, symmetrizes, sorts and rejects loops/duplicates.
Graph make_graph(int n, std::span<const std::pair<int, int>> edge_list,
                 std::vector<std::string> labels = {});

enum class Family { Path, Cycle, Complete, Hypercube, Star };

// path/cycle/complete: size = order. hypercube: size = exponent.
// star: size = number of leaves (hub is vertex 0).
Graph build_family(Family f, int size);
std::optional<Family> family_from_string(const std::string& s);

// Parent array, 1-based entries, exactly one root marked 0.
Graph parse_tree(std::span<const int> parents);
bool is_tree(const Graph& g);

struct Metrics {
    std::vector<std::vector<int>> dist;  // -1 where unreachable (never after metrics())
    std::vector<int> ecc;
    int diameter = 0;
    int radius = 0;
};

std::vector<int> bfs_dist(const Graph& g, int src);
// Throws std::invalid_argument naming a witness pair if g is disconnected.
Metrics metrics(const Graph& g);
bool is_connected(const Graph& g);

struct Bipartition {
    bool bipartite = false;
    std::vector<int> color;      // 0/1 per vertex when bipartite
    std::vector<int> odd_cycle;  // witness cycle (vertex list) when not
    std::vector<int> side(int c) const;
};
Bipartition bipartition(const Graph& g);

std::vector<std::pair<int, int>> bridges(const Graph& g);

// Cartesian product; vertex <u,x> gets flat id u*|V(h)|+x and label "<u+1,x+1>".
Graph cartesian_product(const Graph& g, const Graph& h);

// Vertex-multiplication bookkeeping: copy x of base vertex v (both 0-based)
// maps to flat id offset[v]+x; V_i blocks are contiguous.
struct MulSpec {
    std::vector<int> s;
    std::vector<int> offset;  // size base_n()+1, offset.back() = total()

    int base_n() const { return static_cast<int>(s.size()); }
    int total() const { return offset.back(); }
    int id(int copy, int base) const { return offset[base] + copy; }
    int base_of(int flat) const;
    int copy_of(int flat) const { return flat - offset[base_of(flat)]; }
};

std::pair<Graph, MulSpec> vertex_multiplication(const Graph& g, std::span<const int> s);

}  // namespace orientlab

#endif
