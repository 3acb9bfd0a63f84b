#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace specht {

/// A grid box, 1-indexed: row counted from the top, column from the left.
struct Cell {
  int row = 1;
  int col = 1;

  auto operator<=>(const Cell&) const = default;
};

std::string to_string(const Cell& c);

/// Finite set of grid cells. Cells are kept sorted row-major; per-row and
/// per-column bit masks mirror the cell set (bit j-1 for column j).
/// Empty rows and columns inside the bounding box are allowed.
class Diagram {
 public:
  static constexpr int kMaxExtent = 64;

  Diagram() = default;
  /// Throws DomainError on duplicates or non-positive coordinates,
  /// CapacityError past kMaxExtent rows or columns.
  explicit Diagram(std::vector<Cell> cells);

  static Diagram from_partition(std::span<const int> parts);
  static Diagram from_partition(std::initializer_list<int> parts);
  /// Row r (1-based) holds exactly the columns of row_masks[r-1].
  static Diagram from_row_masks(std::span<const std::uint64_t> row_masks);

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  bool contains(Cell c) const;
  /// Row-major position of c (0-based), or -1.
  int index_of(Cell c) const;

  /// Bounding box extents (largest row / column index present).
  int num_rows() const { return static_cast<int>(row_masks_.size()); }
  int num_cols() const { return static_cast<int>(col_masks_.size()); }

  std::uint64_t row_mask(int row) const;
  std::uint64_t col_mask(int col) const;
  int row_length(int row) const;
  int col_length(int col) const;

  std::vector<int> occupied_rows() const;
  std::vector<int> occupied_cols() const;
  std::vector<Cell> row_cells(int row) const;
  std::vector<Cell> col_cells(int col) const;

  Diagram without(Cell c) const;
  Diagram with(Cell c) const;

  /// Young diagram of a partition, in these exact coordinates.
  bool is_young() const;

  bool operator==(const Diagram& other) const { return cells_ == other.cells_; }
  auto operator<=>(const Diagram& other) const { return cells_ <=> other.cells_; }

 private:
  std::vector<Cell> cells_;
  std::vector<std::uint64_t> row_masks_;
  std::vector<std::uint64_t> col_masks_;
};

/// Parses the ASCII grid form: '#' is a box, '.' is empty, one line per row.
Diagram parse_diagram(const std::string& text);
/// Inverse of parse_diagram; rows are padded with '.' to the bounding box.
std::string render_diagram(const Diagram& d);

struct CanonicalForm {
  Diagram diagram;
  /// row_perm[r-1] = canonical row of original row r, or 0 for an empty row.
  std::vector<int> row_perm;
  std::vector<int> col_perm;
};

/// Lexicographically least cell list reachable by independently permuting
/// occupied rows and occupied columns; empty rows and columns are dropped.
CanonicalForm canonical_form(const Diagram& d);
/// Compact byte string identifying the equivalence class of d.
std::string canonical_key(const Diagram& d);
bool equivalent(const Diagram& a, const Diagram& b);

/// Applies a witnessing map from canonical_form (cells move with their rows and columns).
Diagram permute_diagram(const Diagram& d, std::span<const int> row_perm, std::span<const int> col_perm);

/// Cells of d whose row is in rows and column is in cols, reindexed order-preservingly.
Diagram induced_subdiagram(const Diagram& d, std::span<const int> rows, std::span<const int> cols);

/// A set of rows times a set of columns, stored as masks (bit r-1, bit c-1).
struct Rectangle {
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;

  bool contains(Cell c) const {
    return ((rows >> (c.row - 1)) & 1U) != 0 && ((cols >> (c.col - 1)) & 1U) != 0;
  }
  std::vector<int> row_list() const;
  std::vector<int> col_list() const;
  auto operator<=>(const Rectangle&) const = default;
};

/// Inclusion-maximal rectangles contained in d, sorted by (rows, cols) masks.
std::vector<Rectangle> maximal_rectangles(const Diagram& d);

struct NorthwestCheck {
  bool northwest = false;
  /// order[k] = original row placed at position k+1; rows then satisfy
  /// initial segment order and remain northwest. Empty when not northwest.
  std::vector<int> row_order;
};

NorthwestCheck is_northwest(const Diagram& d);
bool has_northwest_property(const Diagram& d);
bool in_initial_segment_order(const Diagram& d);
/// Rows moved so that new row k+1 is original row order[k].
Diagram reorder_rows(const Diagram& d, std::span<const int> order);

/// Bipartite graph G(D): row vertices, column vertices, one edge per cell.
struct BipartiteView {
  std::vector<int> row_vertices;
  std::vector<int> col_vertices;
  std::vector<std::pair<int, int>> edges;
};

BipartiteView bipartite_view(const Diagram& d);
bool is_forest(const Diagram& d);
/// True iff G(D) has no induced cycle of length greater than 4.
bool is_gamma_freeable(const Diagram& d);
bool is_gamma_free(const Diagram& d);

}  // namespace specht
