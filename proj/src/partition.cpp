#include "cutbound/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace cutbound {

VertexPartition VertexPartition::from_classes(
    int vertex_count, const std::vector<std::vector<VertexId>>& classes) {
  if (vertex_count < 0) {
    throw std::invalid_argument("vertex count must be >= 0");
  }
  VertexPartition p;
  p.class_of_.assign(vertex_count + 1, 0);
  p.classes_.reserve(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) {
      throw std::invalid_argument("partition class " + std::to_string(c + 1) +
                                  " is empty");
    }
    std::vector<VertexId> members = classes[c];
    std::sort(members.begin(), members.end());
    for (VertexId v : members) {
      if (v < 1 || v > vertex_count) {
        throw std::invalid_argument("partition contains out-of-range id " +
                                    std::to_string(v));
      }
      if (p.class_of_[v] != 0) {
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " appears in two classes");
      }
      p.class_of_[v] = static_cast<int>(c + 1);
    }
    p.classes_.push_back(std::move(members));
  }
  for (VertexId v = 1; v <= vertex_count; ++v) {
    if (p.class_of_[v] == 0) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " is not covered by the partition");
    }
  }
  return p;
}

VertexPartition VertexPartition::singletons(int vertex_count) {
  std::vector<std::vector<VertexId>> classes;
  classes.reserve(vertex_count);
  for (VertexId v = 1; v <= vertex_count; ++v) classes.push_back({v});
  return from_classes(vertex_count, classes);
}

VertexPartition VertexPartition::whole(int vertex_count) {
  std::vector<VertexId> all;
  all.reserve(vertex_count);
  for (VertexId v = 1; v <= vertex_count; ++v) all.push_back(v);
  return from_classes(vertex_count, {all});
}

int VertexPartition::class_of(VertexId v) const {
  if (v < 1 || v >= static_cast<int>(class_of_.size())) {
    throw std::invalid_argument("class_of: vertex id out of range");
  }
  return class_of_[v];
}

const std::vector<VertexId>& VertexPartition::members(int c) const {
  if (c < 1 || c > class_count()) {
    throw std::invalid_argument("members: class index out of range");
  }
  return classes_[c - 1];
}

EdgeCount EdgeClassification::internal_multiplicity() const {
  EdgeCount total = 0;
  for (const Edge& e : internal) total += e.multiplicity;
  return total;
}

EdgeCount EdgeClassification::external_multiplicity() const {
  EdgeCount total = 0;
  for (const Edge& e : external) total += e.multiplicity;
  return total;
}

namespace {

void require_matching(const Multigraph& g, const VertexPartition& p,
                      const char* what) {
  if (g.vertex_count() != p.vertex_count()) {
    throw std::invalid_argument(std::string(what) +
                                ": partition does not match vertex count");
  }
}

}  // namespace

EdgeClassification classify_edges(const Multigraph& g,
                                  const VertexPartition& p) {
  require_matching(g, p, "classify_edges");
  EdgeClassification result;
  for (const Edge& e : g.edges()) {
    if (p.class_of(e.u) == p.class_of(e.v)) {
      result.internal.push_back(e);
    } else {
      result.external.push_back(e);
    }
  }
  return result;
}

Multigraph quotient_multigraph(const Multigraph& g, const VertexPartition& p) {
  require_matching(g, p, "quotient_multigraph");
  std::vector<Edge> quotient_edges;
  for (const Edge& e : g.edges()) {
    const int cu = p.class_of(e.u);
    const int cv = p.class_of(e.v);
    if (cu != cv) quotient_edges.push_back({cu, cv, e.multiplicity});
  }
  return Multigraph::from_edge_list(g.orientation(), p.class_count(),
                                    quotient_edges);
}

VertexPartition scc_partition(const Multigraph& g) {
  if (!g.is_directed()) {
    throw std::invalid_argument("scc_partition expects a directed graph");
  }
  const int n = g.vertex_count();
  // Canonical edge order already gives sorted, duplicate-free successor
  // lists per source vertex.
  std::vector<std::vector<VertexId>> successors(n + 1);
  for (const Edge& e : g.edges()) successors[e.u].push_back(e.v);

  // Tarjan with an explicit stack. Components complete only after every
  // component reachable from them has completed, so emitting them in
  // completion order puts sinks first: condensation edges always point from
  // a higher class index to a lower one.
  std::vector<int> index(n + 1, 0), low(n + 1, 0);
  std::vector<char> on_stack(n + 1, 0);
  std::vector<VertexId> stack;
  std::vector<std::vector<VertexId>> classes;
  int next_index = 0;
  struct Frame {
    VertexId v;
    std::size_t next_child;
  };
  std::vector<Frame> frames;
  for (VertexId start = 1; start <= n; ++start) {
    if (index[start] != 0) continue;
    index[start] = low[start] = ++next_index;
    stack.push_back(start);
    on_stack[start] = 1;
    frames.push_back({start, 0});
    while (!frames.empty()) {
      Frame& frame = frames.back();
      if (frame.next_child < successors[frame.v].size()) {
        const VertexId w = successors[frame.v][frame.next_child++];
        if (index[w] == 0) {
          index[w] = low[w] = ++next_index;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[frame.v] = std::min(low[frame.v], index[w]);
        }
      } else {
        const VertexId v = frame.v;
        frames.pop_back();
        if (!frames.empty()) {
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        }
        if (low[v] == index[v]) {
          std::vector<VertexId> members;
          while (true) {
            const VertexId w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            members.push_back(w);
            if (w == v) break;
          }
          std::sort(members.begin(), members.end());
          classes.push_back(std::move(members));
        }
      }
    }
  }
  return VertexPartition::from_classes(n, classes);
}

Condensation condensation(const Multigraph& g) {
  VertexPartition p = scc_partition(g);
  Multigraph quotient = quotient_multigraph(g, p);
  return Condensation{std::move(quotient), std::move(p)};
}

}  // namespace cutbound
