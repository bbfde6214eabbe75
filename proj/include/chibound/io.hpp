#pragma once

#include <iosfwd>
#include <string>

#include "chibound/graph.hpp"

namespace chibound::io {

// Two on-disk formats:
//   DIMACS-like:  "p edge n m" header, then "e u v" lines, 1-based, "c" comments.
//   edge list:    one "u v" pair per line, 0-based, "#" comments. The writer
//                 emits a "# n <count>" first line so isolated vertices round-trip.
// Writers emit sorted edges for byte-stable output.

Graph read_dimacs(std::istream& in);
Graph read_edge_list(std::istream& in);

/// Sniffs the format: a "p"/"c" first token means DIMACS, otherwise edge list.
Graph read_auto(std::istream& in);
Graph read_file(const std::string& path);

void write_dimacs(const Graph& g, std::ostream& out);
void write_edge_list(const Graph& g, std::ostream& out);
void write_file(const Graph& g, const std::string& path); // by extension: .col/.dimacs -> DIMACS, else edge list

} // namespace chibound::io
