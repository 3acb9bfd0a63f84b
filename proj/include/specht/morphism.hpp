#pragma once

#include <vector>

#include "specht/algebra.hpp"
#include "specht/diagram.hpp"

namespace specht {

/// Bijection between the boxes of two diagrams of equal size.
struct CellMap {
  Diagram source;
  Diagram target;
  std::vector<Cell> image;  // image[k] = target box of source.cells()[k]

  Cell operator()(Cell c) const;
  /// As a group element: source position k+1 goes to the target position of image[k].
  Permutation as_permutation() const;
  bool is_identity() const { return source == target && source.cells() == image; }
};

/// Left-justifies the boxes of each row lying in columns 1..k; the row
/// preserving bijection D -> E carries S^E into S^D by e_T -> e_T * psi.
CellMap smash_embedding(const Diagram& d, int k);

/// labels[k] tags the k-th box of d (row-major). Requires labels to be the
/// only column-strict arrangement among its row rearrangements; throws
/// DomainError otherwise. E has box (i, j) for each label i in column j, and
/// the column preserving bijection D -> E gives S^D -> S^E, e_T -> e_{T psi^-1}.
CellMap merge_rows_surjection(const Diagram& d, const std::vector<int>& labels);

/// Tableau of shape target with the labels of t carried across the map backwards.
Tableau push_forward(const Tableau& t, const CellMap& psi);
/// Tableau of shape source: t * psi.
Tableau pull_back(const Tableau& t, const CellMap& psi);

}  // namespace specht
