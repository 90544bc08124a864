#ifndef ORIENTLAB_TREE_LABELING_HPP
#define ORIENTLAB_TREE_LABELING_HPP

#include <string>
#include <vector>

#include "orientlab/graph.hpp"

namespace orientlab {

enum class TreeRole { Center, Child, Grandchild };

// Role scheme for trees of diameter 2..5: the center(s), their children
// and grandchildren exhaust the vertex set. Children are numbered 1.. in
// ascending vertex id per side; grandchildren 1.. per child.
struct TreeLabeling {
    Graph tree;
    int diameter = 0;
    bool two_centers = false;
    int center[2] = {-1, -1};  // center[1] = -1 for even diameter

    struct Tag {
        TreeRole role = TreeRole::Center;
        int side = 0;   // 1 or 2 for odd diameter, 0 otherwise
        int i = 0;      // child index ([i])
        int alpha = 0;  // grandchild index ([alpha,i])
    };
    std::vector<Tag> tags;

    // Children of a center in ascending id (side 0 for even diameter).
    std::vector<std::vector<int>> child_list;  // index 0 (and 1 when two centers)
    std::vector<std::vector<int>> grandchild_list;  // per vertex; nonempty only for children

    const std::vector<int>& children(int side_index) const { return child_list[side_index]; }
    const std::vector<int>& grandchildren(int child) const { return grandchild_list[child]; }
    std::string tag_string(int v) const;
};

// Requires a tree with 2 <= diameter <= 5.
TreeLabeling label_tree(const Graph& t);

// Canonical non-path tree of the given diameter (2..5); used to exercise
// the tree-parameterized constructions beyond paths.
Graph nonpath_tree(int diameter);

}  // namespace orientlab

#endif
