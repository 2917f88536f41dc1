#pragma once

#include <iosfwd>
#include <string>

#include "qwrank/graph.hpp"

namespace qwrank {

/// Shortest round-trip decimal representation of a double (locale-free).
std::string format_double(double value);

/// Edge-list text format: first significant line is the node count N; every
/// further significant line is "src dst [weight]" (whitespace separated,
/// weight defaults to 1.0). Blank lines and lines starting with '#' are
/// ignored. Throws ParseError with the offending 1-based line number.
DirectedGraph read_edge_list(std::istream& in);
DirectedGraph read_edge_list_file(const std::string& path);

/// Canonical form: node count line, then one "src dst weight" line per merged
/// edge in (src, dst) order. read(write(g)) == g.
void write_edge_list(std::ostream& out, const DirectedGraph& g);
void write_edge_list_file(const std::string& path, const DirectedGraph& g);

/// GraphViz digraph for visualization.
void write_dot(std::ostream& out, const DirectedGraph& g);

} // namespace qwrank
