#pragma once

#include <string>
#include <vector>

#include "specht/diagram.hpp"

namespace specht {

/// Sorted row-major list of boxes of some parent diagram.
using BoxSet = std::vector<Cell>;

BoxSet sorted_boxes(BoxSet b);

struct TransversalResult {
  bool accepted = false;
  /// Witnessing order b_1, b_2, ... when accepted.
  std::vector<Cell> order;
  /// Why the set was refused: a shared row or column, or a cycle of constraints.
  std::string reason;
};

/// Orders b so that no earlier box's row meets a later box's column inside d.
/// Throws DomainError if b is not contained in d.
TransversalResult is_special_transversal(const Diagram& d, const BoxSet& b);

/// Matching test plus absence of an alternating cycle in the bipartite graph.
bool is_special_transversal_graph(const Diagram& d, const BoxSet& b);

bool is_exact_hitting_set(const Diagram& d, const BoxSet& b);

/// All box sets meeting every maximal rectangle exactly once, lexicographic order.
std::vector<BoxSet> exact_hitting_sets(const Diagram& d);

/// Bottommost boxes of their columns with no such box further left in the row.
/// Requires the northwest property and rows in initial segment order.
BoxSet northwest_branching_set(const Diagram& d);

/// All almost perfect matchings of the forest G(d), lexicographic order.
std::vector<BoxSet> almost_perfect_matchings(const Diagram& d);

}  // namespace specht
