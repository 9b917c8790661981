#pragma once

#include <cstdint>
#include <vector>

namespace cutbound {

/// Dense 1-based vertex id; valid ids of a graph are 1..vertex_count().
using VertexId = int;

/// Edge multiplicities and cut values. Cut values are sums of
/// multiplicities, so both share one 64-bit type.
using EdgeCount = std::int64_t;

enum class Orientation { undirected, directed };

/// One entry of the canonical edge list: endpoints plus multiplicity.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  EdgeCount multiplicity = 1;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable multigraph over dense 1-based vertex ids.
///
/// Undirected edges are kept with the smaller endpoint first and parallel
/// entries for the same pair merged into one multiplicity, so equal graphs
/// compare equal with operator==. Directed edges (u,v) and (v,u) stay
/// distinct entries. Self-loops are rejected.
class Multigraph {
 public:
  Multigraph() = default;

  /// Builds a canonicalized multigraph. Repeated entries for the same
  /// (canonical) pair have their multiplicities summed. Rejects self-loops,
  /// ids outside [1, vertex_count], and multiplicities < 1.
  static Multigraph from_edge_list(Orientation orientation, int vertex_count,
                                   const std::vector<Edge>& entries);

  Orientation orientation() const { return orientation_; }
  bool is_directed() const { return orientation_ == Orientation::directed; }
  int vertex_count() const { return vertex_count_; }

  /// Canonical edge list, sorted by (u, v).
  const std::vector<Edge>& edges() const { return edges_; }

  /// Sum of all multiplicities.
  EdgeCount total_multiplicity() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  Multigraph(Orientation orientation, int vertex_count, std::vector<Edge> edges)
      : orientation_(orientation),
        vertex_count_(vertex_count),
        edges_(std::move(edges)) {}

  Orientation orientation_ = Orientation::undirected;
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Drops edge directions; each directed occurrence contributes 1 to the
/// multiplicity of its unordered pair. Rejects undirected input.
Multigraph underlying_undirected(const Multigraph& g);

struct InducedSubgraph {
  Multigraph graph;
  /// to_original[i] is the original id of new vertex i+1; new ids are dense
  /// and assigned in ascending order of the original ids.
  std::vector<VertexId> to_original;
};

/// Keeps exactly the edges with both endpoints in `vertices` (with their
/// multiplicities) and re-densifies ids. `vertices` must be a set of valid
/// ids (duplicates rejected).
InducedSubgraph induced_subgraph(const Multigraph& g,
                                 const std::vector<VertexId>& vertices);

/// Total multiplicity of the edges with exactly one endpoint in `left`.
/// Undirected graphs only; `left` must be a set of valid ids.
EdgeCount cut_value(const Multigraph& g, const std::vector<VertexId>& left);

}  // namespace cutbound
