#pragma once

#include <cstdint>

#include "cutbound/cutwidth.hpp"
#include "cutbound/multigraph.hpp"
#include "cutbound/partition.hpp"

namespace cutbound {

struct GeneratedInstance {
  Multigraph graph;
  VertexPartition partition;
};

/// Five-vertex undirected family on {1..5} with a designated partition:
/// edges {1,3}*x, {2,3}*y, {2,5}*(x/2), {3,4}*y, {4,5}*(x/2); partition
/// classes {1}, {5}, {2,3,4}. Requires even x >= 2 and y >= 1.
GeneratedInstance gen_lower_g(int x, int y);

/// Four-vertex undirected family on {1..4}: edges {1,3}*x, {2,3}*y,
/// {3,4}*y, {2,4}*(x/2). Same parameter rules as gen_lower_g. Its exact
/// cutwidth is min(1.5x + y, max(2y, x)).
Multigraph gen_lower_k(int x, int y);

/// Directed family: every edge occurrence of gen_lower_g(x, y) subdivided
/// through its own fresh vertex (ids 6, 7, ... in canonical edge order,
/// exactly as full_subdivision numbers them), then oriented so that
/// {2, 3, 4} plus the midpoints of the 2-3 and 3-4 paths form the single
/// nontrivial strongly connected component: paths run 1->w->3, 2->w->5 and
/// 4->w->5, while of the y parallel 2-3 paths the first y-1 run 3->w->2 and
/// the last runs 2->w->3, and of the y parallel 3-4 paths the first y-1 run
/// 3->w->4 and the last runs 4->w->3. Requires even x >= 2 and y >= 2 (with
/// y = 1 there is no opposite pair of parallel paths, so the component
/// cannot form).
Multigraph gen_lower_h(int x, int y);

/// Directed family on 2n vertices u_i = i, v_i = n + i: the cycle
/// u_1 -> u_2 -> ... -> u_n -> u_1, the same cycle on the v side, and the
/// edges (u_i, v_i). Its condensation is two vertices joined by n parallel
/// edges (cutwidth n) while the graph itself keeps constant cutwidth.
/// Requires n >= 3.
Multigraph gen_nolow_gn(int n);

/// The ordering u_1, v_1, u_2, v_2, ..., u_n, v_n of gen_nolow_gn(n); its
/// width on the underlying undirected graph is at most 5 for every n.
Ordering nolow_interleaving(int n);

/// Seeded, fully reproducible undirected instance: every pair u < v gets an
/// edge with probability edge_density and, if present, a uniform
/// multiplicity in 1..max_multiplicity. Vertices 1..class_count are pinned
/// to classes 1..class_count so no class is empty; the remaining vertices
/// draw a uniform class. The generator's draws are fixed-width operations
/// on a fixed PRNG, so equal seeds give bit-equal instances on every
/// platform.
GeneratedInstance gen_random(std::uint64_t seed, int vertex_count,
                             EdgeCount max_multiplicity, double edge_density,
                             int class_count);

}  // namespace cutbound
