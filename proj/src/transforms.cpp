#include "cutbound/transforms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace cutbound {

SubdivisionResult multiedge_subdivide(const Multigraph& g, VertexId u,
                                      VertexId v, EdgeCount count) {
  if (g.is_directed()) {
    throw std::invalid_argument("multiedge_subdivide expects an undirected graph");
  }
  if (count < 1) {
    throw std::invalid_argument("multiedge_subdivide: count must be >= 1");
  }
  if (u > v) std::swap(u, v);
  std::vector<Edge> edges;
  edges.reserve(g.edges().size() + 2);
  bool found = false;
  for (const Edge& e : g.edges()) {
    if (e.u == u && e.v == v) {
      found = true;
      if (count > e.multiplicity) {
        throw std::invalid_argument(
            "multiedge_subdivide: edge {" + std::to_string(u) + "," +
            std::to_string(v) + "} has multiplicity " +
            std::to_string(e.multiplicity) + " < " + std::to_string(count));
      }
      if (count < e.multiplicity) {
        edges.push_back({u, v, e.multiplicity - count});
      }
    } else {
      edges.push_back(e);
    }
  }
  if (!found) {
    if (u < 1 || v > g.vertex_count() || u == v) {
      throw std::invalid_argument("multiedge_subdivide: invalid endpoints");
    }
    throw std::invalid_argument("multiedge_subdivide: edge {" +
                                std::to_string(u) + "," + std::to_string(v) +
                                "} is absent");
  }
  const VertexId fresh = g.vertex_count() + 1;
  edges.push_back({u, fresh, count});
  edges.push_back({fresh, v, count});
  return SubdivisionResult{
      Multigraph::from_edge_list(Orientation::undirected, fresh, edges),
      SubdivisionStep{u, v, count, fresh}};
}

Multigraph full_subdivision(const Multigraph& g) {
  if (g.is_directed()) {
    throw std::invalid_argument("full_subdivision expects an undirected graph");
  }
  std::vector<Edge> edges;
  VertexId fresh = g.vertex_count();
  for (const Edge& e : g.edges()) {
    for (EdgeCount copy = 0; copy < e.multiplicity; ++copy) {
      ++fresh;
      edges.push_back({e.u, fresh, 1});
      edges.push_back({fresh, e.v, 1});
    }
  }
  return Multigraph::from_edge_list(Orientation::undirected, fresh, edges);
}

}  // namespace cutbound
