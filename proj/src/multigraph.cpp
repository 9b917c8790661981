#include "cutbound/multigraph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace cutbound {

namespace {

// Caps total multiplicity so cut sums can never overflow EdgeCount.
constexpr EdgeCount kMaxTotalMultiplicity = EdgeCount{1} << 62;

void check_vertex(VertexId v, int vertex_count) {
  if (v < 1 || v > vertex_count) {
    throw std::invalid_argument("vertex id " + std::to_string(v) +
                                " out of range 1.." +
                                std::to_string(vertex_count));
  }
}

}  // namespace

Multigraph Multigraph::from_edge_list(Orientation orientation,
                                      int vertex_count,
                                      const std::vector<Edge>& entries) {
  if (vertex_count < 0) {
    throw std::invalid_argument("vertex count must be >= 0");
  }
  std::vector<Edge> canonical;
  canonical.reserve(entries.size());
  EdgeCount total = 0;
  for (Edge e : entries) {
    check_vertex(e.u, vertex_count);
    check_vertex(e.v, vertex_count);
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.multiplicity < 1) {
      throw std::invalid_argument("edge multiplicity must be >= 1");
    }
    if (orientation == Orientation::undirected && e.u > e.v) {
      std::swap(e.u, e.v);
    }
    total += e.multiplicity;
    if (total > kMaxTotalMultiplicity) {
      throw std::invalid_argument("total edge multiplicity too large");
    }
    canonical.push_back(e);
  }
  std::sort(canonical.begin(), canonical.end(),
            [](const Edge& a, const Edge& b) {
              return std::pair{a.u, a.v} < std::pair{b.u, b.v};
            });
  std::vector<Edge> merged;
  merged.reserve(canonical.size());
  for (const Edge& e : canonical) {
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
      merged.back().multiplicity += e.multiplicity;
    } else {
      merged.push_back(e);
    }
  }
  return Multigraph(orientation, vertex_count, std::move(merged));
}

EdgeCount Multigraph::total_multiplicity() const {
  EdgeCount total = 0;
  for (const Edge& e : edges_) total += e.multiplicity;
  return total;
}

Multigraph underlying_undirected(const Multigraph& g) {
  if (!g.is_directed()) {
    throw std::invalid_argument(
        "underlying_undirected expects a directed graph");
  }
  return Multigraph::from_edge_list(Orientation::undirected, g.vertex_count(),
                                    g.edges());
}

InducedSubgraph induced_subgraph(const Multigraph& g,
                                 const std::vector<VertexId>& vertices) {
  std::vector<VertexId> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("induced_subgraph: duplicate vertex id");
  }
  std::vector<VertexId> new_id(g.vertex_count() + 1, 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1 || sorted[i] > g.vertex_count()) {
      throw std::invalid_argument("induced_subgraph: vertex id out of range");
    }
    new_id[sorted[i]] = static_cast<VertexId>(i + 1);
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (new_id[e.u] != 0 && new_id[e.v] != 0) {
      kept.push_back({new_id[e.u], new_id[e.v], e.multiplicity});
    }
  }
  return InducedSubgraph{
      Multigraph::from_edge_list(g.orientation(),
                                 static_cast<int>(sorted.size()), kept),
      std::move(sorted)};
}

EdgeCount cut_value(const Multigraph& g, const std::vector<VertexId>& left) {
  if (g.is_directed()) {
    throw std::invalid_argument("cut_value expects an undirected graph");
  }
  std::vector<char> in_left(g.vertex_count() + 1, 0);
  for (VertexId v : left) {
    if (v < 1 || v > g.vertex_count()) {
      throw std::invalid_argument("cut_value: vertex id out of range");
    }
    if (in_left[v]) {
      throw std::invalid_argument("cut_value: duplicate vertex id");
    }
    in_left[v] = 1;
  }
  EdgeCount total = 0;
  for (const Edge& e : g.edges()) {
    if (in_left[e.u] != in_left[e.v]) total += e.multiplicity;
  }
  return total;
}

}  // namespace cutbound
