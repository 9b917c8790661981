#include "cutbound/io.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>
#include <vector>

namespace cutbound {

namespace {

// Significant line of input: 1-based number plus whitespace-split tokens.
struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream input(text);
  std::string raw;
  int number = 0;
  while (std::getline(input, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream splitter(raw);
    Line line{number, {}};
    std::string token;
    while (splitter >> token) line.tokens.push_back(token);
    if (line.tokens.empty() || line.tokens[0][0] == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

std::int64_t parse_integer(const Line& line, const std::string& token,
                           const char* what) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line.number,
                     std::string("expected ") + what + ", got '" + token + "'");
  }
  return value;
}

int parse_vertex_id(const Line& line, const std::string& token,
                    int vertex_count) {
  const std::int64_t value = parse_integer(line, token, "a vertex id");
  if (value < 1 || value > vertex_count) {
    throw ParseError(line.number, "vertex id " + token + " out of range 1.." +
                                      std::to_string(vertex_count));
  }
  return static_cast<int>(value);
}

}  // namespace

std::string serialize_graph(const Multigraph& g) {
  std::ostringstream out;
  out << (g.is_directed() ? "directed" : "undirected") << '\n'
      << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.u << ' ' << e.v << ' ' << e.multiplicity << '\n';
  }
  return out.str();
}

Multigraph parse_graph(const std::string& text) {
  const std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) {
    throw ParseError(0, "missing header line ('directed' or 'undirected')");
  }
  std::size_t at = 0;

  const Line& header = lines[at++];
  Orientation orientation;
  if (header.tokens.size() == 1 && header.tokens[0] == "directed") {
    orientation = Orientation::directed;
  } else if (header.tokens.size() == 1 && header.tokens[0] == "undirected") {
    orientation = Orientation::undirected;
  } else {
    throw ParseError(header.number,
                     "header must be exactly 'directed' or 'undirected'");
  }

  if (at == lines.size()) {
    throw ParseError(0, "missing vertex count line");
  }
  const Line& count_line = lines[at++];
  if (count_line.tokens.size() != 1) {
    throw ParseError(count_line.number,
                     "vertex count line must hold a single integer");
  }
  const std::int64_t count =
      parse_integer(count_line, count_line.tokens[0], "the vertex count");
  if (count < 0 || count > 1'000'000'000) {
    throw ParseError(count_line.number, "vertex count out of range");
  }
  const int vertex_count = static_cast<int>(count);

  std::vector<Edge> edges;
  for (; at < lines.size(); ++at) {
    const Line& line = lines[at];
    if (line.tokens[0] != "e") {
      throw ParseError(line.number,
                       "expected an edge line 'e u v [m]', got '" +
                           line.tokens[0] + "'");
    }
    if (line.tokens.size() < 3 || line.tokens.size() > 4) {
      throw ParseError(line.number, "edge line must be 'e u v' or 'e u v m'");
    }
    const int u = parse_vertex_id(line, line.tokens[1], vertex_count);
    const int v = parse_vertex_id(line, line.tokens[2], vertex_count);
    if (u == v) {
      throw ParseError(line.number, "self-loops are not allowed");
    }
    EdgeCount multiplicity = 1;
    if (line.tokens.size() == 4) {
      multiplicity = parse_integer(line, line.tokens[3], "a multiplicity");
      if (multiplicity < 1) {
        throw ParseError(line.number, "multiplicity must be >= 1");
      }
    }
    edges.push_back({u, v, multiplicity});
  }
  return Multigraph::from_edge_list(orientation, vertex_count, edges);
}

std::string serialize_partition(const VertexPartition& p) {
  std::ostringstream out;
  for (int c = 1; c <= p.class_count(); ++c) {
    const std::vector<VertexId>& members = p.members(c);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i > 0) out << ' ';
      out << members[i];
    }
    out << '\n';
  }
  return out.str();
}

VertexPartition parse_partition(const std::string& text, int vertex_count) {
  std::vector<std::vector<VertexId>> classes;
  for (const Line& line : significant_lines(text)) {
    std::vector<VertexId> members;
    members.reserve(line.tokens.size());
    for (const std::string& token : line.tokens) {
      members.push_back(parse_vertex_id(line, token, vertex_count));
    }
    classes.push_back(std::move(members));
  }
  return VertexPartition::from_classes(vertex_count, classes);
}

}  // namespace cutbound
