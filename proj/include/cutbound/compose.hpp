#pragma once

#include <stdexcept>
#include <vector>

#include "cutbound/cutwidth.hpp"
#include "cutbound/multigraph.hpp"
#include "cutbound/partition.hpp"

namespace cutbound {

/// A verification that should never fail did fail; aborting loudly beats
/// returning a certificate that does not certify anything.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Whether a class keeps its given ordering or uses the reverse.
enum class ClassOrientation { forward, reverse };

/// Edge blocks for one class C of a quotient ordering and one split of C
/// into a left part C- and a right part C+. Relative to C's position in the
/// quotient ordering every vertex falls into one of four zones:
///   before (classes left of C), C-, C+, after (classes right of C);
/// the eight fields count edge multiplicity per unordered zone pair (m =
/// before zone, p = after zone, cm/cp = the class parts, cc = inside C) and
/// sum to the graph's total multiplicity.
struct EdgeDecomposition {
  EdgeCount e_mm = 0;    // before <-> before
  EdgeCount e_pp = 0;    // after <-> after
  EdgeCount e_cc = 0;    // inside the class, both parts
  EdgeCount e_m_cm = 0;  // before <-> C-
  EdgeCount e_cp_p = 0;  // C+ <-> after
  EdgeCount e_m_cp = 0;  // before <-> C+
  EdgeCount e_cm_p = 0;  // C- <-> after
  EdgeCount e_m_p = 0;   // before <-> after

  EdgeCount total() const {
    return e_mm + e_pp + e_cc + e_m_cm + e_cp_p + e_m_cp + e_cm_p + e_m_p;
  }

  /// Multiplicity crossing the cut (before + C-, C+ + after) that is not
  /// internal to the class: the class-internal share is bounded separately
  /// by the class ordering's own width.
  EdgeCount forward_external() const { return e_m_cp + e_cm_p + e_m_p; }

  /// Same crossing when the class block is reversed, so that C+ sits left
  /// of C-.
  EdgeCount reverse_external() const { return e_m_cm + e_cp_p + e_m_p; }

  friend bool operator==(const EdgeDecomposition&, const EdgeDecomposition&) =
      default;
};

/// Orientation picked for one class, with the maximum forward external
/// crossing n over the class ordering's prefix splits (C+ nonempty).
/// Invariant: orientation == forward implies 2n <= 3x.
struct OrientationChoice {
  ClassOrientation orientation = ClassOrientation::forward;
  EdgeCount forward_max = 0;
};

enum class BoundKind { simple_2x_plus_y, theorem_1_5x_plus_y };

/// An ordering together with the inequality it witnesses: achieved is the
/// ordering's evaluated width, x the width of the quotient ordering used,
/// y the maximum class ordering width. Guarantees achieved <= 2x + y
/// (simple) or 2 * achieved <= 3x + 2y (the integer form of 1.5x + y).
struct BoundCertificate {
  BoundKind bound_kind = BoundKind::simple_2x_plus_y;
  Ordering ordering;
  EdgeCount achieved = 0;
  EdgeCount x = 0;
  EdgeCount y = 0;
  std::vector<ClassOrientation> orientations;  // one per class

  /// The certified upper bound: 2x + y, or (3x + 2y) / 2 rounded down
  /// (widths are integers, so flooring loses nothing).
  EdgeCount bound() const;
};

/// Concatenates the classes in quotient order, each class laid out in its
/// given ordering or the reverse of it. class_orders[c-1] must permute the
/// members of class c; quotient_order must permute the class indices.
Ordering compose_compatible(const Multigraph& g, const VertexPartition& p,
                            const Ordering& quotient_order,
                            const std::vector<Ordering>& class_orders,
                            const std::vector<ClassOrientation>& orientations);

/// The eight block counts for class `class_index` at the split
/// (class_left, class_right), which must partition the class's members.
EdgeDecomposition class_edge_decomposition(
    const Multigraph& g, const VertexPartition& p,
    const Ordering& quotient_order, int class_index,
    const std::vector<VertexId>& class_left,
    const std::vector<VertexId>& class_right);

/// Picks the orientation for one class: computes n, the maximum forward
/// external crossing over the prefix splits of class_order with C+
/// nonempty, and returns forward when 2n <= 3x, reverse otherwise. x must
/// be the width of quotient_order on the quotient multigraph.
OrientationChoice choose_orientation(const Multigraph& g,
                                     const VertexPartition& p,
                                     const Ordering& quotient_order,
                                     int class_index,
                                     const Ordering& class_order, EdgeCount x);

/// Compatible ordering with every class forward; certifies
/// achieved <= 2x + y.
BoundCertificate compose_simple(const Multigraph& g, const VertexPartition& p,
                                const Ordering& quotient_order,
                                const std::vector<Ordering>& class_orders);

/// Compatible ordering with per-class orientations from choose_orientation;
/// certifies 2 * achieved <= 3x + 2y. Verifies the chosen case's inequality
/// at every prefix split of every class and the final certificate
/// inequality, raising InternalConsistencyError on any violation.
BoundCertificate compose_theorem(const Multigraph& g, const VertexPartition& p,
                                 const Ordering& quotient_order,
                                 const std::vector<Ordering>& class_orders);

/// Auto variants: class orderings are taken from the exact solver on each
/// induced class subgraph, so y is the maximum exact class cutwidth.
BoundCertificate compose_simple_auto(const Multigraph& g,
                                     const VertexPartition& p,
                                     const Ordering& quotient_order,
                                     int budget = kDefaultSolverBudget);
BoundCertificate compose_theorem_auto(const Multigraph& g,
                                      const VertexPartition& p,
                                      const Ordering& quotient_order,
                                      int budget = kDefaultSolverBudget);

}  // namespace cutbound
