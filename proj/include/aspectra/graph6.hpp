#ifndef ASPECTRA_GRAPH6_HPP
#define ASPECTRA_GRAPH6_HPP

#include <string>
#include <vector>

#include "aspectra/graph.hpp"

namespace aspectra {

// Standard graph6 encoding (bit-packed upper triangle, 6 bits per byte,
// offset 63). Supports orders up to 258047; the optional ">>graph6<<"
// header is accepted on input.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

// One graph per line; blank lines ignored.
std::vector<Graph> read_graph6_lines(const std::string& text);

}  // namespace aspectra

#endif
