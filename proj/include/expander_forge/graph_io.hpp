#pragma once

// Line-oriented graph text format:
//
//   G <chi> <n>
//   E <u> <v>        one line per edge; loops are written "E u u"
//
// Vertex names are v1..v<chi> for interior vertices and w1..w<n> for
// boundary vertices, numbered in id order within each role. Blank lines and
// text after '#' are ignored when reading. Parsing yields interior vertices
// first (ids 0..chi-1) followed by boundary vertices, so a graph already in
// that layout round-trips exactly and any other graph round-trips up to that
// relabelling.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "expander_forge/graph.hpp"

namespace expander_forge {

void write_graph(std::ostream& out, const MultiGraph& g);
std::string to_graph_text(const MultiGraph& g);

/// Throws ParseError on malformed input.
MultiGraph read_graph(std::istream& in);
MultiGraph parse_graph_text(const std::string& text);

MultiGraph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const MultiGraph& g);

/// "v3" / "w1" style name of vertex `v` in g.
std::string vertex_name(const MultiGraph& g, int v);

}  // namespace expander_forge
