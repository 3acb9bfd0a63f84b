#pragma once

#include <map>
#include <string>
#include <vector>

#include "specht/classifier.hpp"
#include "specht/diagram.hpp"

namespace specht {

/// Canonical representatives of all diagrams with at most max_boxes boxes
/// inside a rows x cols grid, ordered by size then cell list. Throws
/// CapacityError when the subset count exceeds an internal budget.
std::vector<Diagram> enumerate_classes(int max_boxes, int rows, int cols);

/// Complete branching decided on the algebraic side: some exact-hitting
/// special transversal passes verify_branching and every removal again
/// qualifies. Memoized per equivalence class; n <= kTargetedBound.
bool oracle_completely_branching(const Diagram& d);

struct SweepOptions {
  int max_boxes = 4;
  int rows = 3;
  int cols = 3;
  bool oracle = false;
  /// Largest size sent to the oracle cross-check.
  int oracle_max_boxes = 7;
  int jobs = 1;
};

struct SweepReport {
  SweepOptions options;
  std::size_t classes = 0;
  std::size_t completely_branching = 0;
  std::size_t not_completely_branching = 0;
  /// size -> (completely branching, not)
  std::map<int, std::pair<std::size_t, std::size_t>> by_size;
  std::vector<Diagram> branching_classes;
  std::vector<Diagram> nonbranching_classes;
  std::size_t northwest = 0;
  std::size_t forest = 0;
  std::size_t gamma_freeable = 0;
  /// Containment violations, one list per property.
  std::vector<Diagram> northwest_not_branching;
  std::vector<Diagram> forest_not_branching;
  std::vector<Diagram> branching_not_gamma_freeable;
  std::vector<Diagram> induced_closure_failures;
  std::size_t oracle_checked = 0;
  std::vector<Diagram> oracle_disagreements;
  std::map<std::string, double> seconds;

  bool clean() const;
};

SweepReport run_sweep(const SweepOptions& options, Classifier& classifier = shared_classifier());

}  // namespace specht
