#pragma once

#include <vector>

#include "cutbound/multigraph.hpp"

namespace cutbound {

/// Record of one subdivision: `subdivided` parallel copies of {u, v} were
/// replaced by {u, fresh_vertex} and {fresh_vertex, v}, each with the same
/// multiplicity.
struct SubdivisionStep {
  VertexId u = 0;
  VertexId v = 0;
  EdgeCount subdivided = 0;
  VertexId fresh_vertex = 0;

  friend auto operator<=>(const SubdivisionStep&, const SubdivisionStep&) =
      default;
};

struct SubdivisionResult {
  Multigraph graph;
  SubdivisionStep step;
};

/// Subdivides `count` of the parallel copies of the undirected edge {u, v}
/// through one fresh vertex (id vertex_count + 1). The remaining
/// multiplicity of {u, v}, if any, stays in place. Rejects directed graphs,
/// count < 1, absent edges, and count above the available multiplicity.
SubdivisionResult multiedge_subdivide(const Multigraph& g, VertexId u,
                                      VertexId v, EdgeCount count);

/// Subdivides every single edge occurrence through its own fresh vertex.
/// Fresh ids are vertex_count + 1, vertex_count + 2, ... assigned to
/// occurrences in canonical edge-list order. The result is a simple graph
/// with vertex_count + total_multiplicity vertices.
Multigraph full_subdivision(const Multigraph& g);

}  // namespace cutbound
