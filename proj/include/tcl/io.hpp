#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tcl/hypergraph.hpp"

namespace tcl {

// ".3g": first line "3 <n>", then one edge per line as three integers.
// Blank lines and lines whose first non-space character is '#' are skipped.
// Errors raise ParseError with the 1-based line number.
Hypergraph3 read_hypergraph(std::istream& in);

// Canonical form. Each comment is written as "# <comment>" after the header.
void write_hypergraph(std::ostream& out, const Hypergraph3& h,
                      const std::vector<std::string>& comments = {});

// ".2g": same rules with header "2 <n>" and two integers per line.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g,
                 const std::vector<std::string>& comments = {});

// Reads from the named file, or from standard input when path is "-".
Hypergraph3 load_hypergraph(const std::string& path);
Graph load_graph(const std::string& path);

}  // namespace tcl
