#ifndef ORIENTLAB_ANALYSIS_HPP
#define ORIENTLAB_ANALYSIS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orientlab/graph.hpp"
#include "orientlab/orientation.hpp"
#include "orientlab/search.hpp"

namespace orientlab {

// Exact central binomial coefficient C(n, floor(n/2)).
unsigned long long sperner_max_antichain(int n);

struct LowerCertificate {
    std::string kind;  // "window" | "forcing" | "sperner" | "exhaustive"
    int value = 0;
};

// Interval verdict for the orientation number of a multiplication of g.
struct ClassVerdict {
    int base_diameter = 0;
    int lower = 0;
    int upper = 0;
    std::string lower_kind = "window";
    std::string upper_witness;      // construction id backing the upper bound
    std::optional<int> class_index; // engaged when lower == upper
    std::string describe() const;
};

// Combines the general two-above-base window (|V| >= 3, all s >= 2), an
// optional witness orientation, and an optional lower-bound certificate.
ClassVerdict classify(const Graph& g, std::span<const int> s, const Orientation* upper_witness,
                      const std::string& witness_id = "",
                      const std::optional<LowerCertificate>& lower_cert = std::nullopt);

enum class ForcedForm { NotForced, Hub1, Hub2 };

// Unique-2-path middle forcing: when all copy pairs of u0 and u2 sit at
// directed distance exactly 2 both ways, one middle copy carries all forward
// traffic and the other all return traffic. Requires multiplicity 2 on u0,
// u1, u2. Hub1 means copy 1 of u1 is the forward hub.
ForcedForm forced_hub_form(const Orientation& d, const MulSpec& spec, int u0, int u1, int u2);

// Checks the two-head-pair-plus-chains pattern along a shortest base path
// and certifies (by BFS) directed distance k between every copy of the two
// endpoints, both ways. Returns k; throws when the pattern conditions fail.
int certified_path_distance(const Orientation& d, const MulSpec& spec,
                            std::span<const int> path, int gadget_pos);

struct DominationResult {
    bool containment = false;
    int p = -1, q = -1;  // vertices with O(p) restricted to the block inside O(q)
};

// Looks for two sources whose block-restricted outsets nest; every source
// must be adjacent to every block vertex. "No containment" certifies the
// restricted outsets form an antichain.
DominationResult outset_domination(const Orientation& d, std::span<const int> block,
                                   std::span<const int> sources);

struct ForcingOutcome {
    bool refuted = false;        // no diameter-3 orientation exists
    bool inconclusive = false;   // budget exhausted before every case closed
    int cases = 0;
    std::vector<SearchStats> case_stats;
    long long total_nodes = 0;
};

// Machine-checked replay of the middle-rail forcing for multiplications of
// the 3x2 grid: case-split on the forced rail forms, then exhaust the
// residual arcs. Supported multiplicity shapes: all 2; one middle >= 3 and
// the rest 2; both middles 2 with arbitrary corners >= 2.
ForcingOutcome forcing_lower_bound_p3p2(const Graph& p3p2, const MulSpec& spec,
                                        const SearchBudget& budget = {});

}  // namespace orientlab

#endif
