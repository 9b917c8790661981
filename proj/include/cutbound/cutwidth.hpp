#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cutbound/multigraph.hpp"

namespace cutbound {

/// A linear layout: permutation of 1..vertex_count, left to right.
using Ordering = std::vector<VertexId>;

/// Largest component size the exact solver accepts by default. The solver
/// enumerates vertex subsets of each connected component, so time and memory
/// grow as 2^n for a component with n vertices.
inline constexpr int kDefaultSolverBudget = 20;

/// Absolute ceiling on the per-component budget (tables stop fitting in
/// memory beyond this, whatever the caller asks for).
inline constexpr int kMaxSolverBudget = 26;

/// Exact solving was requested for a component larger than the budget.
class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CutwidthResult {
  EdgeCount value = 0;
  Ordering witness;
};

/// Width of one given ordering: the maximum, over proper prefixes, of the
/// total multiplicity crossing the prefix/suffix cut. Returns 0 when the
/// graph has fewer than two vertices. Undirected only; `order` must be a
/// permutation of 1..vertex_count.
EdgeCount ordering_cutwidth(const Multigraph& g, const Ordering& order);

/// Minimum ordering width over all orderings, with a witness attaining it.
/// Solves each connected component independently and concatenates witnesses.
/// Components larger than `budget` raise BudgetExceededError. Ties in the
/// witness are broken toward the smallest vertex id at each step.
CutwidthResult exact_cutwidth(const Multigraph& g,
                              int budget = kDefaultSolverBudget);

/// Like exact_cutwidth but prunes any state whose cut already exceeds
/// `threshold`; returns nullopt when no ordering of width <= threshold
/// exists. The budget rule is unchanged.
std::optional<CutwidthResult> exact_cutwidth_within(
    const Multigraph& g, EdgeCount threshold, int budget = kDefaultSolverBudget);

}  // namespace cutbound
