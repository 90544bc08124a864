#ifndef ORIENTLAB_ORIENTATION_HPP
#define ORIENTLAB_ORIENTATION_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orientlab/graph.hpp"

namespace orientlab {

// Total orientation of a graph: exactly one arc per edge.
struct Orientation {
    Graph base;
    std::vector<std::vector<int>> out;  // sorted out-neighbor lists
    std::vector<std::vector<int>> in;   // sorted in-neighbor lists

    bool has_arc(int u, int v) const;
    int arc_count() const;
    std::vector<std::pair<int, int>> arcs() const;  // sorted (tail, head)
};

Orientation reverse(const Orientation& d);

struct DirectedMetrics {
    std::vector<std::vector<int>> dist;  // -1 = unreachable
    bool strong = false;
    std::optional<int> diameter;  // engaged iff strong
};
DirectedMetrics directed_metrics(const Orientation& d);
std::vector<int> directed_bfs(const Orientation& d, int src);

// max over v of (1 + min over w in O(v) of d(w,v)); requires strong input.
int min_cycle_per_vertex(const Orientation& d);

// Certified upper bound max{m, d(d)} for every componentwise-larger
// multiplication, valid when every vertex lies on a cycle of length <= m.
int lift_bound(const Orientation& d, int m);

// Arc-gadget vocabulary between the copies of two adjacent base vertices.
enum class GadgetKind { Parallel, Cyclic, Twohead1, Twohead2 };
std::string gadget_name(GadgetKind k);

// Staged orientation of a vertex-multiplied graph. Rules fire at base-edge
// granularity; a second rule touching an already-oriented base edge is a
// construction bug unless applied through the *_if_free entry point.
class MulOrientationBuilder {
  public:
    MulOrientationBuilder(Graph multiplied, MulSpec spec);

    bool base_edge_oriented(int base_u, int base_v) const;
    // Throws if the base edge is absent or already (even partially) oriented.
    void gadget(GadgetKind k, int base_u, int base_v);
    // Skips silently when the base edge is fully oriented; returns whether applied.
    bool gadget_if_free(GadgetKind k, int base_u, int base_v);
    // Single arc between copies; for rule sets given arc-by-arc.
    void arc(int copy_u, int base_u, int copy_v, int base_v);

    struct Attribution {
        int base_u, base_v;
        GadgetKind kind;
        bool explicit_arcs = false;  // true for arc()-built edges
    };
    // One entry per oriented base edge, in application order.
    const std::vector<Attribution>& rule_log() const { return log_; }
    // Base edges not yet covered by any rule (must be empty before finalize).
    std::vector<std::pair<int, int>> unoriented_base_edges() const;

    Orientation finalize() const;  // throws if any edge is unoriented

  private:
    Graph g_;
    MulSpec spec_;
    std::vector<std::pair<int, int>> flat_edges_;       // (u,v), u<v, sorted
    std::vector<signed char> dir_;                      // -1 unset, 0 u->v, 1 v->u
    std::vector<int> base_edge_remaining_;              // per base edge, unset flat count
    std::vector<std::pair<int, int>> base_edges_;       // (u,v), u<v, sorted
    std::vector<Attribution> log_;
    std::vector<signed char> base_logged_;

    int flat_edge_index(int u, int v) const;
    int base_edge_index(int u, int v) const;
    void set_arc(int from, int to);
    void apply_gadget_arcs(GadgetKind k, int base_u, int base_v);
};

// Same staging for plain (unmultiplied) graphs, used by the search module
// and for hand-built orientations.
class OrientationBuilder {
  public:
    explicit OrientationBuilder(Graph g);
    bool oriented(int u, int v) const;
    void arc(int u, int v);          // throws on absent edge or conflict
    bool arc_if_free(int u, int v);  // false when the edge is already set
    Orientation finalize() const;

  private:
    Graph g_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<signed char> dir_;
    int edge_index(int u, int v) const;
};

// Build an Orientation directly from a full arc list.
Orientation orientation_from_arcs(Graph g, std::span<const std::pair<int, int>> arcs);

// Clone-extension behind lift_bound: every extra copy of a base vertex
// mimics the in/out pattern of copy 0. Preserves "every vertex on a cycle
// of length <= m" and d <= max{m, d(d)}.
std::pair<Orientation, MulSpec> extend_multiplication(const Graph& parent, const MulSpec& from,
                                                      const Orientation& d,
                                                      std::span<const int> to);

}  // namespace orientlab

#endif
