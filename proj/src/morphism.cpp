#include "specht/morphism.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "specht/errors.hpp"

namespace specht {

Cell CellMap::operator()(Cell c) const {
  const int k = source.index_of(c);
  if (k < 0) throw DomainError("box " + to_string(c) + " is not in the source diagram");
  return image[k];
}

Permutation CellMap::as_permutation() const {
  std::vector<int> img(image.size());
  for (std::size_t k = 0; k < image.size(); ++k) img[k] = target.index_of(image[k]) + 1;
  return Permutation(img);
}

CellMap smash_embedding(const Diagram& d, int k) {
  if (k < 1) throw DomainError("smash needs at least one column");
  CellMap m;
  m.source = d;
  std::vector<Cell> cells;
  for (int r : d.occupied_rows()) {
    int next = 1;
    for (const Cell& c : d.row_cells(r)) {
      if (c.col <= k) {
        cells.push_back({r, next++});
      } else {
        cells.push_back(c);
      }
    }
  }
  // cells follows the row-major order of d, which is the order of image.
  m.image = cells;
  m.target = Diagram(cells);
  return m;
}

CellMap merge_rows_surjection(const Diagram& d, const std::vector<int>& labels) {
  if (labels.size() != d.size()) throw DomainError("row-merge tableau needs one label per box");
  for (int l : labels)
    if (l < 1) throw DomainError("row-merge labels must be positive");
  const std::vector<Cell>& cells = d.cells();
  auto column_strict = [&](const std::vector<int>& lab) {
    std::map<std::pair<int, int>, int> seen;  // (column, label)
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (++seen[{cells[k].col, lab[k]}] > 1) return false;
    return true;
  };
  // Count column-strict rearrangements within rows.
  std::vector<std::vector<int>> rows;  // indices per row
  for (int r : d.occupied_rows()) {
    std::vector<int> idx;
    for (const Cell& c : d.row_cells(r)) idx.push_back(d.index_of(c));
    rows.push_back(std::move(idx));
  }
  int strict = 0;
  bool self_strict = false;
  std::vector<int> lab = labels;
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (strict > 1) return;
    if (r == rows.size()) {
      if (column_strict(lab)) {
        ++strict;
        if (lab == labels) self_strict = true;
      }
      return;
    }
    std::vector<int> vals;
    for (int k : rows[r]) vals.push_back(labels[k]);
    std::sort(vals.begin(), vals.end());
    do {
      for (std::size_t t = 0; t < vals.size(); ++t) lab[rows[r][t]] = vals[t];
      rec(r + 1);
    } while (std::next_permutation(vals.begin(), vals.end()));
    for (int k : rows[r]) lab[k] = labels[k];
  };
  rec(0);
  if (strict != 1 || !self_strict)
    throw DomainError("labels are not the unique column-strict arrangement within their rows");

  CellMap m;
  m.source = d;
  for (std::size_t k = 0; k < cells.size(); ++k) m.image.push_back({labels[k], cells[k].col});
  m.target = Diagram(m.image);
  return m;
}

Tableau push_forward(const Tableau& t, const CellMap& psi) {
  if (!(t.shape() == psi.source)) throw DomainError("tableau shape differs from the map source");
  std::vector<std::pair<Cell, int>> entries;
  for (std::size_t k = 0; k < psi.image.size(); ++k) entries.emplace_back(psi.image[k], t.labels()[k]);
  return Tableau::from_cells(psi.target, entries);
}

Tableau pull_back(const Tableau& t, const CellMap& psi) {
  if (!(t.shape() == psi.target)) throw DomainError("tableau shape differs from the map target");
  std::vector<int> labels(psi.image.size());
  for (std::size_t k = 0; k < psi.image.size(); ++k) labels[k] = t.at(psi.image[k]);
  return Tableau(psi.source, labels);
}

}  // namespace specht
