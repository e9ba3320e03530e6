#pragma once

#include <iosfwd>
#include <string>

#include "raagprobe/errors.hpp"
#include "raagprobe/graph.hpp"

namespace raagprobe {

// Text format:
//   # comment (ignored, as are blank lines)
//   n <vertex-count>
//   e <u> <v>
// Duplicate edges are tolerated on read; self-loops and out-of-range
// endpoints are rejected with the offending line number (ParseError).
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

// Canonical form: the n line followed by edges sorted lexicographically
// with u < v, no comments, no duplicates. parse . write . parse == parse.
void write_graph(const Graph& g, std::ostream& out);
void write_graph_file(const Graph& g, const std::string& path);
std::string graph_to_string(const Graph& g);

}
