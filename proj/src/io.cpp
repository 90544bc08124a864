#include "orientlab/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace orientlab {

namespace {

std::pair<int, int> read_header(std::istream& in, const char* what) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument(std::string(what) + ": missing 'n m' header");
    if (n < 0 || m < 0) throw std::invalid_argument(std::string(what) + ": negative header");
    return {n, m};
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    auto [n, m] = read_header(in, "edge list");
    std::vector<std::pair<int, int>> e;
    e.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated input");
        e.emplace_back(u - 1, v - 1);
    }
    return make_graph(n, e);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    auto e = g.edges();
    out << g.n << " " << e.size() << "\n";
    for (auto [u, v] : e) out << u + 1 << " " << v + 1 << "\n";
}

Graph read_tree(std::istream& in) {
    std::vector<int> parents;
    int p;
    while (in >> p) parents.push_back(p);
    return parse_tree(parents);
}

Orientation read_arc_list(std::istream& in) {
    auto [n, m] = read_header(in, "arc list");
    std::vector<std::pair<int, int>> edges, arcs;
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("arc list: truncated input");
        edges.emplace_back(u - 1, v - 1);
        arcs.emplace_back(u - 1, v - 1);
    }
    return orientation_from_arcs(make_graph(n, edges), arcs);
}

void write_arc_list(std::ostream& out, const Orientation& d) {
    auto a = d.arcs();
    out << d.base.n << " " << a.size() << "\n";
    for (auto [u, v] : a) out << u + 1 << " " << v + 1 << "\n";
}

void write_dot(std::ostream& out, const Orientation& d, const std::string& name) {
    out << "digraph \"" << name << "\" {\n";
    for (int v = 0; v < d.base.n; ++v) {
        out << "  " << v + 1;
        if (!d.base.labels.empty()) out << " [label=\"" << d.base.labels[v] << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : d.arcs()) out << "  " << u + 1 << " -> " << v + 1 << ";\n";
    out << "}\n";
}

std::string to_string_arc_list(const Orientation& d) {
    std::ostringstream ss;
    write_arc_list(ss, d);
    return ss.str();
}

std::string to_string_dot(const Orientation& d, const std::string& name) {
    std::ostringstream ss;
    write_dot(ss, d, name);
    return ss.str();
}

}  // namespace orientlab
