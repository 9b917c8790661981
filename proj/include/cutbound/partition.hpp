#pragma once

#include <vector>

#include "cutbound/multigraph.hpp"

namespace cutbound {

/// A partition of the vertex set 1..vertex_count into nonempty classes.
/// Classes are numbered 1..class_count by their position in the list given
/// to from_classes; each class keeps its members sorted ascending.
class VertexPartition {
 public:
  VertexPartition() = default;

  /// Validates that the classes are nonempty, pairwise disjoint, and cover
  /// 1..vertex_count exactly. Member order inside a class is normalized to
  /// ascending; class order is preserved.
  static VertexPartition from_classes(
      int vertex_count, const std::vector<std::vector<VertexId>>& classes);

  /// Every vertex in its own class, class i = {i}.
  static VertexPartition singletons(int vertex_count);

  /// One class containing every vertex.
  static VertexPartition whole(int vertex_count);

  int vertex_count() const { return static_cast<int>(class_of_.size()) - 1; }
  int class_count() const { return static_cast<int>(classes_.size()); }

  /// 1-based class index of vertex v.
  int class_of(VertexId v) const;

  /// Members of class c (1-based), ascending.
  const std::vector<VertexId>& members(int c) const;

  const std::vector<std::vector<VertexId>>& classes() const { return classes_; }

  friend bool operator==(const VertexPartition&, const VertexPartition&) =
      default;

 private:
  std::vector<std::vector<VertexId>> classes_;
  std::vector<int> class_of_;  // index 0 unused
};

/// Edges of a graph split by the partition: internal edges join two vertices
/// of the same class, external edges join distinct classes. Both lists keep
/// original endpoints and multiplicities in canonical edge order.
struct EdgeClassification {
  std::vector<Edge> internal;
  std::vector<Edge> external;

  EdgeCount internal_multiplicity() const;
  EdgeCount external_multiplicity() const;
};

EdgeClassification classify_edges(const Multigraph& g,
                                  const VertexPartition& p);

/// Contracts each class to a single vertex (class c becomes vertex c).
/// Internal edges disappear; external edges keep their multiplicities, and
/// parallel edges between the same pair of classes merge. The orientation
/// of g is preserved. The partition must match g's vertex count.
Multigraph quotient_multigraph(const Multigraph& g, const VertexPartition& p);

/// Strongly connected components of a directed graph, as a partition whose
/// class order is a reverse topological order of the condensation: every
/// edge of the condensation goes from a higher class index to a lower one.
VertexPartition scc_partition(const Multigraph& g);

struct Condensation {
  Multigraph graph;  // quotient by the SCC partition
  VertexPartition partition;
};

/// SCC partition together with its quotient.
Condensation condensation(const Multigraph& g);

}  // namespace cutbound
