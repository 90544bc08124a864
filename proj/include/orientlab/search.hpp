#ifndef ORIENTLAB_SEARCH_HPP
#define ORIENTLAB_SEARCH_HPP

#include <optional>
#include <span>
#include <vector>

#include "orientlab/graph.hpp"
#include "orientlab/orientation.hpp"

namespace orientlab {

struct SearchBudget {
    long long max_nodes = 20'000'000;
    bool symmetry = true;   // root-level automorphism reduction
    bool propagate = true;  // one-step lookahead forcing
};

struct SearchStats {
    long long nodes = 0;
    long long pruned_distance = 0;
    long long pruned_dead_vertex = 0;
    long long forced_arcs = 0;
    bool budget_exhausted = false;
    bool root_symmetry_used = false;
};

enum class RefuteOutcome { Refuted, Witness, BudgetExhausted };

struct RefuteResult {
    RefuteOutcome outcome = RefuteOutcome::BudgetExhausted;
    std::optional<Orientation> witness;  // diameter <= k, extends the fixed arcs
    SearchStats stats;
};

// Exhaustive decision "does some orientation extending `fixed` have diameter
// <= k": depth-first over edge directions, pruned by relaxed-distance lower
// bounds (free edges traversable both ways) and dead in/out vertices.
// Requires a connected bridgeless graph on at most 64 vertices.
RefuteResult refute_diameter(const Graph& g, int k,
                             std::span<const std::pair<int, int>> fixed,
                             const SearchBudget& budget = {});

struct OrientationNumber {
    bool exact = false;
    int lower = 0;  // certified: no orientation of smaller diameter exists
    std::optional<int> upper;
    std::optional<Orientation> witness;
    SearchStats stats;  // accumulated over all levels
};

// Minimum diameter over strong orientations, by iterative deepening on k.
OrientationNumber orientation_number(const Graph& g, const SearchBudget& budget = {});

// All automorphisms (as vertex permutations) up to max_count, found by
// plain backtracking with degree filtering; intended for small graphs.
std::vector<std::vector<int>> automorphisms(const Graph& g, std::size_t max_count = 1 << 20);

// Brandes accumulation; values align with g.edges().
std::vector<double> edge_betweenness(const Graph& g);

}  // namespace orientlab

#endif
