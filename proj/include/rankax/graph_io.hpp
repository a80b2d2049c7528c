#ifndef RANKAX_GRAPH_IO_HPP
#define RANKAX_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "rankax/graph.hpp"
#include "rankax/rational.hpp"

namespace rankax {

// Result of parsing the text graph format. The exact weights preserve the
// decimal literals so the rational mode is not contaminated by binary
// rounding of the double weights.
struct ParsedGraph {
    MultiGraph graph;
    RationalMap exact_weights;
};

// Text format, one statement per line, `#` starts a comment:
//   node <id> <weight>
//   edge <src> <dst> [multiplicity]
// Duplicate edge lines accumulate multiplicity; an edge naming an undeclared
// node is an error.
ParsedGraph parse_graph(std::istream& in, const std::string& source_name = "<input>");
ParsedGraph parse_graph_text(const std::string& text);
ParsedGraph load_graph_file(const std::string& path);

// Canonical form: sorted node lines, then sorted edge lines. A graph written
// by this formatter re-parses to an identical MultiGraph.
std::string format_graph(const MultiGraph& g);
void save_graph_file(const MultiGraph& g, const std::string& path);

}  // namespace rankax

#endif
