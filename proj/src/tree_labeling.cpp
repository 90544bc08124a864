#include "orientlab/tree_labeling.hpp"

#include <algorithm>
#include <stdexcept>

namespace orientlab {

std::string TreeLabeling::tag_string(int v) const {
    const Tag& t = tags[v];
    std::string sub = t.side ? "_" + std::to_string(t.side) : "";
    switch (t.role) {
        case TreeRole::Center:
            return two_centers ? "c" + std::to_string(t.side) : "c";
        case TreeRole::Child:
            return "[" + std::to_string(t.i) + "]" + sub;
        case TreeRole::Grandchild:
            return "[" + std::to_string(t.alpha) + "," + std::to_string(t.i) + "]" + sub;
    }
    return "?";
}

TreeLabeling label_tree(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("label_tree: input is not a tree");
    Metrics m = metrics(t);
    if (m.diameter < 2 || m.diameter > 5)
        throw std::invalid_argument("label_tree: diameter " + std::to_string(m.diameter) +
                                    " outside supported range [2,5]");

    TreeLabeling lab;
    lab.tree = t;
    lab.diameter = m.diameter;
    lab.two_centers = (m.diameter % 2 == 1);

    std::vector<int> centers;
    for (int v = 0; v < t.n; ++v)
        if (m.ecc[v] == m.radius) centers.push_back(v);
    if (lab.two_centers) {
        if (centers.size() != 2 || !t.has_edge(centers[0], centers[1]))
            throw std::invalid_argument("label_tree: expected two adjacent centers");
        lab.center[0] = centers[0];
        lab.center[1] = centers[1];
    } else {
        if (centers.size() != 1)
            throw std::invalid_argument("label_tree: expected a unique center");
        lab.center[0] = centers[0];
    }

    lab.tags.assign(t.n, {});
    lab.grandchild_list.assign(t.n, {});
    int sides = lab.two_centers ? 2 : 1;
    lab.child_list.assign(sides, {});

    for (int k = 0; k < sides; ++k) {
        int c = lab.center[k];
        lab.tags[c] = {TreeRole::Center, lab.two_centers ? k + 1 : 0, 0, 0};
        for (int v : t.adj[c]) {
            if (lab.two_centers && v == lab.center[1 - k]) continue;
            lab.child_list[k].push_back(v);  // adj is ascending, so child order is too
        }
        int i = 0;
        for (int v : lab.child_list[k]) {
            ++i;
            lab.tags[v] = {TreeRole::Child, lab.two_centers ? k + 1 : 0, i, 0};
            int alpha = 0;
            for (int w : t.adj[v]) {
                if (w == c) continue;
                ++alpha;
                lab.tags[w] = {TreeRole::Grandchild, lab.two_centers ? k + 1 : 0, i, alpha};
                lab.grandchild_list[v].push_back(w);
            }
        }
    }

    // Diameter <= 5 guarantees the three levels exhaust the tree; verify anyway.
    std::vector<char> seen(t.n, 0);
    for (int k = 0; k < sides; ++k) {
        seen[lab.center[k]] = 1;
        for (int v : lab.child_list[k]) {
            seen[v] = 1;
            for (int w : lab.grandchild_list[v]) seen[w] = 1;
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw std::logic_error("label_tree: vertex beyond grandchild depth");
    return lab;
}

Graph nonpath_tree(int diameter) {
    // Parent arrays, root at vertex 1.
    switch (diameter) {
        case 2:
            return parse_tree(std::vector<int>{0, 1, 1, 1});  // K_{1,3}
        case 3:
            // Double star: centers 1,2; two leaves on 1, one on 2.
            return parse_tree(std::vector<int>{0, 1, 1, 1, 2});
        case 4:
            // Spider with three legs of length 2.
            return parse_tree(std::vector<int>{0, 1, 1, 1, 2, 3, 4});
        case 5:
            // Two centers, each with a leaf child and a child carrying a leaf.
            return parse_tree(std::vector<int>{0, 1, 1, 1, 2, 2, 4, 5});
        default:
            throw std::invalid_argument("nonpath_tree: diameter must be in [2,5]");
    }
}

}  // namespace orientlab
