#include "cutbound/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cutbound {

namespace {

void check_xy(int x, int y, int min_y) {
  if (x < 2 || x % 2 != 0) {
    throw std::invalid_argument("x must be an even integer >= 2");
  }
  if (y < min_y) {
    throw std::invalid_argument("y must be >= " + std::to_string(min_y));
  }
}

std::vector<Edge> lower_g_edges(int x, int y) {
  return {{1, 3, x}, {2, 3, y}, {2, 5, x / 2}, {3, 4, y}, {4, 5, x / 2}};
}

}  // namespace

GeneratedInstance gen_lower_g(int x, int y) {
  check_xy(x, y, 1);
  return GeneratedInstance{
      Multigraph::from_edge_list(Orientation::undirected, 5,
                                 lower_g_edges(x, y)),
      VertexPartition::from_classes(5, {{1}, {5}, {2, 3, 4}})};
}

Multigraph gen_lower_k(int x, int y) {
  check_xy(x, y, 1);
  return Multigraph::from_edge_list(
      Orientation::undirected, 4,
      {{1, 3, x}, {2, 3, y}, {2, 4, x / 2}, {3, 4, y}});
}

Multigraph gen_lower_h(int x, int y) {
  check_xy(x, y, 2);
  // Walk the canonical edge list of gen_lower_g(x, y) occurrence by
  // occurrence, handing out midpoint ids exactly as full_subdivision does,
  // and orient each two-edge path per its block's rule.
  std::vector<Edge> edges;
  VertexId fresh = 5;
  const Multigraph base =
      Multigraph::from_edge_list(Orientation::undirected, 5, lower_g_edges(x, y));
  for (const Edge& e : base.edges()) {
    for (EdgeCount copy = 1; copy <= e.multiplicity; ++copy) {
      const VertexId w = ++fresh;
      const bool last_copy = copy == e.multiplicity;
      VertexId from = e.u, to = e.v;
      if (e.u == 2 && e.v == 3 && !last_copy) std::swap(from, to);
      if (e.u == 3 && e.v == 4 && last_copy) std::swap(from, to);
      edges.push_back({from, w, 1});
      edges.push_back({w, to, 1});
    }
  }
  return Multigraph::from_edge_list(Orientation::directed, fresh, edges);
}

Multigraph gen_nolow_gn(int n) {
  if (n < 3) {
    throw std::invalid_argument("n must be >= 3");
  }
  std::vector<Edge> edges;
  edges.reserve(3 * n);
  for (int i = 1; i <= n; ++i) {
    const int next = i % n + 1;
    edges.push_back({i, next, 1});          // u-cycle
    edges.push_back({n + i, n + next, 1});  // v-cycle
    edges.push_back({i, n + i, 1});
  }
  return Multigraph::from_edge_list(Orientation::directed, 2 * n, edges);
}

Ordering nolow_interleaving(int n) {
  if (n < 3) {
    throw std::invalid_argument("n must be >= 3");
  }
  Ordering order;
  order.reserve(2 * n);
  for (int i = 1; i <= n; ++i) {
    order.push_back(i);
    order.push_back(n + i);
  }
  return order;
}

GeneratedInstance gen_random(std::uint64_t seed, int vertex_count,
                             EdgeCount max_multiplicity, double edge_density,
                             int class_count) {
  if (vertex_count < 1) {
    throw std::invalid_argument("vertex count must be >= 1");
  }
  if (class_count < 1 || class_count > vertex_count) {
    throw std::invalid_argument("class count must be in 1..vertex count");
  }
  if (max_multiplicity < 1) {
    throw std::invalid_argument("max multiplicity must be >= 1");
  }
  if (!(edge_density >= 0.0 && edge_density <= 1.0)) {
    throw std::invalid_argument("edge density must be in [0, 1]");
  }
  // std::mt19937_64's output sequence is fixed by the standard; the
  // distribution classes are not, so draws below stay hand-rolled.
  std::mt19937_64 rng(seed);
  const double threshold = edge_density * 9007199254740992.0;  // 2^53
  std::vector<Edge> edges;
  for (VertexId u = 1; u <= vertex_count; ++u) {
    for (VertexId v = u + 1; v <= vertex_count; ++v) {
      const bool present = static_cast<double>(rng() >> 11) < threshold;
      if (present) {
        const EdgeCount multiplicity =
            1 + static_cast<EdgeCount>(
                    rng() % static_cast<std::uint64_t>(max_multiplicity));
        edges.push_back({u, v, multiplicity});
      }
    }
  }
  std::vector<std::vector<VertexId>> classes(class_count);
  for (VertexId v = 1; v <= vertex_count; ++v) {
    const int c = v <= class_count
                      ? v
                      : 1 + static_cast<int>(
                                rng() % static_cast<std::uint64_t>(class_count));
    classes[c - 1].push_back(v);
  }
  return GeneratedInstance{
      Multigraph::from_edge_list(Orientation::undirected, vertex_count, edges),
      VertexPartition::from_classes(vertex_count, classes)};
}

}  // namespace cutbound
