#ifndef ORIENTLAB_CONSTRUCTIONS_HPP
#define ORIENTLAB_CONSTRUCTIONS_HPP

#include <string>
#include <vector>

#include "orientlab/graph.hpp"
#include "orientlab/orientation.hpp"
#include "orientlab/tree_labeling.hpp"

namespace orientlab {

// An explicitly constructed orientation of a vertex-multiplied graph,
// together with the diameter it is claimed to attain.
struct ConstructionResult {
    std::string id;
    std::string family;
    Graph parent;   // the graph being multiplied (e.g. a product)
    MulSpec spec;
    Orientation orient;
    int claimed_diameter = 0;
    bool claim_exact = true;  // false: claimed value is an upper bound only
    int cycle_bound = 4;      // claimed min-cycle-per-vertex bound
    std::string claimed_class;
    std::vector<MulOrientationBuilder::Attribution> rules;
};

// Product of two labeled trees of diameters 2..5 (first factor) and 3..5
// (second). Any tree shapes of those diameters are accepted.
ConstructionResult tree_tree(const TreeLabeling& tl, const TreeLabeling& tm);

// Rectangular grid P_lambda x P_mu, lambda >= mu >= 2, (2,2) excluded.
ConstructionResult grid(int lambda, int mu);

// The 3-cube on the two-squares-plus-matching labeling.
ConstructionResult q3();

// Tree x cycle: lambda >= 2 with mu >= 4, or lambda = mu = 3. Any tree is
// accepted; the triangle case needs diameter 3 and labels it internally.
ConstructionResult tree_cycle(const Graph& t, int mu);

// Diameter-2 tree x complete graph, mu >= 3.
ConstructionResult t2_complete(const TreeLabeling& t, int mu);

// P2 x K_mu, mu >= 3.
ConstructionResult p2_complete(int mu);

// Cycle x cycle: lambda >= mu >= 4 (parity construction), (4,3) and (3,3).
ConstructionResult cycle_cycle(int lambda, int mu);

// The multiplication of P3 x P2 with multiplicity 4 at both middle vertices.
ConstructionResult p3p2_c0_example();

// Copies d (an orientation of g's 2-multiplication) into every fiber of
// g x h and closes each fiber-to-fiber step with a cyclic gadget.
ConstructionResult lift_product(const Graph& g, const Orientation& d_of_g2, const Graph& h,
                                const std::string& id = "");
ConstructionResult lift_product(const ConstructionResult& base, const Graph& h);

// String-addressable registry ("grid:3,2", "tree_tree:4,5:spider", ...).
ConstructionResult build_construction(const std::string& id);
// The verification table: every construction with a claimed exact diameter.
std::vector<std::string> verification_ids();

}  // namespace orientlab

#endif
