#ifndef ORIENTLAB_IO_HPP
#define ORIENTLAB_IO_HPP

#include <iosfwd>
#include <string>

#include "orientlab/graph.hpp"
#include "orientlab/orientation.hpp"

namespace orientlab {

// Edge list: first line "n m", then m lines "u v", all 1-based.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Tree: one line of n parent indices, root marked 0.
Graph read_tree(std::istream& in);

// Arc list: same framing as the edge list but each line is an ordered pair.
Orientation read_arc_list(std::istream& in);
void write_arc_list(std::ostream& out, const Orientation& d);

// DOT digraph, one arc per line, ascending (tail, head); labels when present.
void write_dot(std::ostream& out, const Orientation& d, const std::string& name = "orientation");

std::string to_string_arc_list(const Orientation& d);
std::string to_string_dot(const Orientation& d, const std::string& name = "orientation");

}  // namespace orientlab

#endif
