#include "cutbound/cutwidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

namespace cutbound {

namespace {

constexpr EdgeCount kInfinity = std::numeric_limits<EdgeCount>::max();

using AdjacencyList = std::vector<std::vector<std::pair<VertexId, EdgeCount>>>;

AdjacencyList build_adjacency(const Multigraph& g) {
  AdjacencyList adj(g.vertex_count() + 1);
  for (const Edge& e : g.edges()) {
    adj[e.u].emplace_back(e.v, e.multiplicity);
    adj[e.v].emplace_back(e.u, e.multiplicity);
  }
  return adj;
}

void require_undirected(const Multigraph& g, const char* what) {
  if (g.is_directed()) {
    throw std::invalid_argument(std::string(what) +
                                " expects an undirected graph");
  }
}

// Connected components as ascending vertex lists, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(
    const Multigraph& g, const AdjacencyList& adj) {
  std::vector<char> seen(g.vertex_count() + 1, 0);
  std::vector<std::vector<VertexId>> components;
  std::vector<VertexId> stack;
  for (VertexId start = 1; start <= g.vertex_count(); ++start) {
    if (seen[start]) continue;
    std::vector<VertexId> component;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (auto [w, m] : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

// Subset DP over one component, already re-densified to local ids 1..k in
// ascending original-id order. f(S) is the best achievable maximum prefix
// cut over orderings that place exactly S first; the cut after prefix S does
// not depend on the order inside S, so
//   f(S) = max(cut(S), min over v in S of f(S minus v)),
// and the minimizing v is the last vertex of the prefix. Scanning v in
// ascending id and keeping the first strict minimum makes the reconstructed
// witness prefer small ids. When `threshold` is set, any state whose cut
// exceeds it is dead (kInfinity).
std::optional<CutwidthResult> solve_component(
    const Multigraph& local, std::optional<EdgeCount> threshold) {
  const int n = local.vertex_count();
  if (n <= 1) {
    Ordering order(n);
    std::iota(order.begin(), order.end(), 1);
    return CutwidthResult{0, std::move(order)};
  }
  std::vector<EdgeCount> weighted_degree(n, 0);
  // bit_weight[v][w] = multiplicity between local vertices v and w, as a
  // flat matrix for fast subset sums.
  std::vector<EdgeCount> weight(static_cast<std::size_t>(n) * n, 0);
  for (const Edge& e : local.edges()) {
    int a = e.u - 1, b = e.v - 1;
    weighted_degree[a] += e.multiplicity;
    weighted_degree[b] += e.multiplicity;
    weight[static_cast<std::size_t>(a) * n + b] = e.multiplicity;
    weight[static_cast<std::size_t>(b) * n + a] = e.multiplicity;
  }
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<EdgeCount> cut(static_cast<std::size_t>(full) + 1);
  std::vector<EdgeCount> f(static_cast<std::size_t>(full) + 1);
  std::vector<std::uint8_t> last(static_cast<std::size_t>(full) + 1, 0);
  cut[0] = 0;
  f[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const int low = std::countr_zero(s);
    const std::uint32_t rest = s & (s - 1);
    // cut(S) = cut(S - low) + wdeg(low) - 2 * weight(low, S - low)
    EdgeCount to_rest = 0;
    const EdgeCount* row = weight.data() + static_cast<std::size_t>(low) * n;
    for (std::uint32_t t = rest; t != 0; t &= t - 1) {
      to_rest += row[std::countr_zero(t)];
    }
    cut[s] = cut[rest] + weighted_degree[low] - 2 * to_rest;
    if (threshold && cut[s] > *threshold) {
      f[s] = kInfinity;
      continue;
    }
    EdgeCount best = kInfinity;
    int best_v = -1;
    for (std::uint32_t t = s; t != 0; t &= t - 1) {
      const int v = std::countr_zero(t);
      const EdgeCount candidate = f[s & ~(1u << v)];
      if (candidate < best) {
        best = candidate;
        best_v = v;
      }
    }
    if (best == kInfinity) {
      f[s] = kInfinity;
      continue;
    }
    f[s] = std::max(cut[s], best);
    last[s] = static_cast<std::uint8_t>(best_v);
  }
  if (f[full] == kInfinity) return std::nullopt;
  Ordering order(n);
  std::uint32_t s = full;
  for (int pos = n - 1; pos >= 0; --pos) {
    const int v = last[s];
    order[pos] = v + 1;
    s &= ~(1u << v);
  }
  return CutwidthResult{f[full], std::move(order)};
}

std::optional<CutwidthResult> solve(const Multigraph& g,
                                    std::optional<EdgeCount> threshold,
                                    int budget) {
  require_undirected(g, "exact_cutwidth");
  if (budget < 1 || budget > kMaxSolverBudget) {
    throw std::invalid_argument("solver budget must be in 1.." +
                                std::to_string(kMaxSolverBudget));
  }
  const AdjacencyList adj = build_adjacency(g);
  CutwidthResult result;
  for (const std::vector<VertexId>& component : connected_components(g, adj)) {
    if (static_cast<int>(component.size()) > budget) {
      throw BudgetExceededError(
          "component with " + std::to_string(component.size()) +
          " vertices exceeds solver budget " + std::to_string(budget));
    }
    InducedSubgraph sub = induced_subgraph(g, component);
    std::optional<CutwidthResult> local = solve_component(sub.graph, threshold);
    if (!local) return std::nullopt;
    result.value = std::max(result.value, local->value);
    for (VertexId v : local->witness) {
      result.witness.push_back(sub.to_original[v - 1]);
    }
  }
  return result;
}

}  // namespace

EdgeCount ordering_cutwidth(const Multigraph& g, const Ordering& order) {
  require_undirected(g, "ordering_cutwidth");
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("ordering length does not match vertex count");
  }
  std::vector<char> placed(n + 1, 0);
  for (VertexId v : order) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("ordering contains out-of-range id");
    }
    if (placed[v]) {
      throw std::invalid_argument("ordering repeats vertex " +
                                  std::to_string(v));
    }
    placed[v] = 1;
  }
  if (n <= 1) return 0;
  std::fill(placed.begin(), placed.end(), 0);
  const AdjacencyList adj = build_adjacency(g);
  EdgeCount current = 0;
  EdgeCount width = 0;
  for (int i = 0; i < n - 1; ++i) {
    const VertexId v = order[i];
    placed[v] = 1;
    for (auto [w, m] : adj[v]) {
      current += placed[w] ? -m : m;
    }
    width = std::max(width, current);
  }
  return width;
}

CutwidthResult exact_cutwidth(const Multigraph& g, int budget) {
  return *solve(g, std::nullopt, budget);
}

std::optional<CutwidthResult> exact_cutwidth_within(const Multigraph& g,
                                                    EdgeCount threshold,
                                                    int budget) {
  if (threshold < 0) return std::nullopt;
  return solve(g, threshold, budget);
}

}  // namespace cutbound
