#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wrd/graph.hpp"

namespace wrd {

// Weighted-DIMACS text:
//
//   c <comment>
//   p wrd <n> <m>
//   v <id> <weight>     exactly n lines, ids 1..n, weight decimal or p/q
//   e <u> <v>           exactly m lines, u < v
//
// Lines appear in the order c*, p, v*, e*. Blank lines are ignored.

struct DimacsDocument {
  std::vector<std::string> comments;  // text after "c ", one per line
  WeightedGraph graph;
};

/// Throws ParseError with the 1-based line and column of the first problem.
DimacsDocument parse_dimacs(std::string_view text);
DimacsDocument read_dimacs_file(const std::string& path);

/// Canonical form: comments, header, v lines by id, e lines sorted, weights
/// as canonical rationals. Parsing and re-serializing canonical text is
/// byte-identical.
std::string serialize_dimacs(const DimacsDocument& doc);
std::string serialize_dimacs(const WeightedGraph& g);
void write_dimacs_file(const std::string& path, const DimacsDocument& doc);

}  // namespace wrd
