#ifndef PPART_IO_HPP
#define PPART_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "ppart/graph.hpp"
#include "ppart/partitioner.hpp"

namespace ppart {

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  int line;
};

// Edge list: one "u v" pair per line, optional "n=<count>" first line,
// blank lines ignored.  Without the header, n = max id + 1 (0 when empty).
// Self-loops, malformed tokens and ids beyond a given header are rejected
// with the offending line number; duplicate edges collapse.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// graph6, bit-exact per the published format: 6-bit groups of the upper
// triangle in column order, offset by 63.  Accepts the optional
// ">>graph6<<" header.  Strict: bad characters, wrong length and nonzero
// padding bits are rejected.  emit produces the canonical shortest form
// (supported through n <= 258047).
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

// Sniffs the format: a first non-blank line starting with "n=" or
// containing a space is an edge list; otherwise a first character in
// ['?', '~'] means graph6.
Graph parse_graph_auto(std::string_view text);

// Partition file: "kind=2proper" or "kind=almost" header, then one part
// per line as space-separated vertex ids.
std::string serialize_partition(const Partition& p);
Partition parse_partition(std::string_view text);

}  // namespace ppart

#endif
