#pragma once

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "specht/errors.hpp"
#include "specht/garnir.hpp"
#include "specht/io.hpp"
#include "specht/oracle.hpp"
#include "specht/straighten.hpp"

#ifndef SPECHT_FIXTURE_DIR
#error "SPECHT_FIXTURE_DIR must point at the fixture directory"
#endif

namespace specht::testing {

inline std::string fixture_path(const std::string& name) { return std::string(SPECHT_FIXTURE_DIR) + "/" + name; }
inline std::string fixture_text(const std::string& name) { return io::read_file(fixture_path(name)); }
inline Diagram fixture_diagram(const std::string& name) { return io::parse_diagram_any(fixture_text(name)); }
inline BoxSet fixture_boxes(const std::string& name) { return io::parse_boxset(fixture_text(name)); }

inline std::vector<int> identity_labels(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

inline Tableau random_tableau(const Diagram& d, std::mt19937& rng) {
  std::vector<int> labels = identity_labels(d.size());
  std::shuffle(labels.begin(), labels.end(), rng);
  return Tableau(d, labels);
}

inline bool all_zero(const DenseVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

/// Every diagram (not just classes) with at most max_boxes cells in a rows x cols grid.
inline std::vector<Diagram> all_diagrams(int max_boxes, int rows, int cols) {
  std::vector<Diagram> out;
  const int cells = rows * cols;
  for (std::uint32_t mask = 0; mask < (1U << cells); ++mask) {
    if (std::popcount(mask) > max_boxes) continue;
    std::vector<Cell> cs;
    for (int k = 0; k < cells; ++k)
      if (((mask >> k) & 1U) != 0) cs.push_back({k / cols + 1, k % cols + 1});
    out.emplace_back(cs);
  }
  return out;
}

/// Subsets of the boxes of d, as sorted box sets.
inline std::vector<BoxSet> all_subsets(const Diagram& d) {
  std::vector<BoxSet> out;
  const std::size_t n = d.size();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    BoxSet b;
    for (std::size_t k = 0; k < n; ++k)
      if (((mask >> k) & 1U) != 0) b.push_back(d.cells()[k]);
    out.push_back(b);
  }
  return out;
}

/// Random structurally sound datum: m sets over m+1 distinct occupied
/// columns, each set a random subset of its two columns, sets disjoint.
/// Validity is not enforced.
inline std::optional<GarnirDatum> random_datum(const Diagram& d, int m, std::mt19937& rng) {
  std::vector<int> cols = d.occupied_cols();
  if (static_cast<int>(cols.size()) < m + 1) return std::nullopt;
  std::shuffle(cols.begin(), cols.end(), rng);
  GarnirDatum g;
  g.columns.assign(cols.begin(), cols.begin() + m + 1);
  std::vector<Cell> used;
  for (int i = 0; i < m; ++i) {
    BoxSet s;
    for (int c : {g.columns[i], g.columns[i + 1]})
      for (const Cell& x : d.col_cells(c))
        if (std::find(used.begin(), used.end(), x) == used.end() && (rng() & 1U) != 0) s.push_back(x);
    for (const Cell& x : s) used.push_back(x);
    g.sets.push_back(sorted_boxes(s));
  }
  return g;
}

/// Oracle coordinates of e_T over the given tableaux, by an exact solve in the group algebra.
inline std::optional<std::vector<Rational>> oracle_coordinates(const std::vector<Tableau>& basis, const Tableau& t) {
  const DenseVector sym = young_symmetrizer_dense(t.shape());
  std::vector<DenseVector> vs;
  for (const Tableau& b : basis) vs.push_back(specht_vector_dense(b, sym));
  return solve_in_span(vs, specht_vector_dense(t, sym));
}

/// Straighten t and compare with the oracle solve over the chain basis.
inline bool straighten_matches_oracle(const Tableau& t, const ChoiceFunction& choice, std::string* why = nullptr) {
  const std::vector<ChainTableau> chains = chain_basis(t.shape(), choice);
  std::vector<Tableau> basis;
  for (const ChainTableau& c : chains) basis.push_back(c.tableau);
  const auto expected = oracle_coordinates(basis, t);
  if (!expected) {
    if (why) *why = "oracle solve failed for " + to_string(t);
    return false;
  }
  const StraightenResult r = straighten(t, choice);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto it = r.coordinates.find(basis[k]);
    const Rational got = it == r.coordinates.end() ? Rational(0) : it->second;
    if (got != (*expected)[k]) {
      if (why) *why = "coordinate mismatch at " + to_string(basis[k]) + " for " + to_string(t);
      return false;
    }
  }
  for (const auto& [tab, c] : r.coordinates)
    if (std::find(basis.begin(), basis.end(), tab) == basis.end()) {
      if (why) *why = "coordinate outside the chain basis";
      return false;
    }
  const TraceCheck check = verify_trace(*r.trace);
  if (!check.ok && why) *why = "trace: " + check.reason;
  return check.ok;
}

}  // namespace specht::testing
