#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "cutbound/cutwidth.hpp"
#include "cutbound/multigraph.hpp"

namespace testutil {

// Ordering width computed the slow way: every prefix re-evaluated from
// scratch with cut_value, independent of the incremental evaluator.
inline cutbound::EdgeCount naive_ordering_width(const cutbound::Multigraph& g,
                                                const cutbound::Ordering& order) {
  cutbound::EdgeCount width = 0;
  for (std::size_t k = 1; k < order.size(); ++k) {
    const std::vector<cutbound::VertexId> prefix(order.begin(),
                                                 order.begin() + k);
    width = std::max(width, cutbound::cut_value(g, prefix));
  }
  return width;
}

// Exhaustive minimum over all |V|! orderings; usable up to ~8 vertices.
inline cutbound::EdgeCount brute_force_cutwidth(const cutbound::Multigraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 0;
  cutbound::Ordering perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  cutbound::EdgeCount best = naive_ordering_width(g, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    best = std::min(best, naive_ordering_width(g, perm));
  }
  return best;
}

// Kahn's algorithm; multiplicities are irrelevant to acyclicity.
inline bool is_acyclic(const cutbound::Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> indegree(n + 1, 0);
  std::vector<std::vector<cutbound::VertexId>> successors(n + 1);
  for (const cutbound::Edge& e : g.edges()) {
    successors[e.u].push_back(e.v);
    ++indegree[e.v];
  }
  std::vector<cutbound::VertexId> ready;
  for (int v = 1; v <= n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    const cutbound::VertexId v = ready.back();
    ready.pop_back();
    ++removed;
    for (cutbound::VertexId w : successors[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return removed == n;
}

// Seeded directed multigraph for component and condensation tests.
inline cutbound::Multigraph random_digraph(std::uint64_t seed, int max_n) {
  std::mt19937_64 rng(seed);
  const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
  std::vector<cutbound::Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) {
      if (u == v) continue;
      if (rng() % 100 < 25) {
        edges.push_back({u, v, 1 + static_cast<cutbound::EdgeCount>(rng() % 2)});
      }
    }
  }
  return cutbound::Multigraph::from_edge_list(cutbound::Orientation::directed,
                                              n, edges);
}

// Uniformly seeded permutation of 1..n.
inline cutbound::Ordering random_ordering(std::mt19937_64& rng, int n) {
  cutbound::Ordering order(n);
  std::iota(order.begin(), order.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(order[i], order[j]);
  }
  return order;
}

}  // namespace testutil
