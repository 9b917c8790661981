#pragma once

#include <stdexcept>
#include <string>

#include "cutbound/multigraph.hpp"
#include "cutbound/partition.hpp"

namespace cutbound {

/// Malformed graph or partition text. line() is 1-based; 0 means the input
/// ended before the required content.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Graph text format, line oriented with LF endings:
///   line 1: "directed" or "undirected"
///   line 2: vertex count
///   then one line per edge: "e u v m" (m may be omitted when 1)
/// Blank lines and lines starting with "#" are ignored. The serializer
/// always writes the multiplicity and emits edges in canonical order, so
/// serialization is byte-stable and parse(serialize(g)) == g.
std::string serialize_graph(const Multigraph& g);
Multigraph parse_graph(const std::string& text);

/// Partition text format: one class per line, space-separated vertex ids.
/// Blank lines and "#" comments are ignored. Classes are numbered in line
/// order; the lines must partition 1..vertex_count.
std::string serialize_partition(const VertexPartition& p);
VertexPartition parse_partition(const std::string& text, int vertex_count);

}  // namespace cutbound
