#include "specht/diagram.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "specht/errors.hpp"

namespace specht {

std::string to_string(const Cell& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

Diagram::Diagram(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    const Cell& c = cells_[k];
    if (c.row < 1 || c.col < 1) throw DomainError("cell " + to_string(c) + " has a non-positive index");
    if (c.row > kMaxExtent || c.col > kMaxExtent)
      throw CapacityError("cell " + to_string(c) + " lies outside the 64x64 grid");
    if (k > 0 && cells_[k - 1] == c) throw DomainError("duplicate cell " + to_string(c));
  }
  int rows = 0;
  int cols = 0;
  for (const Cell& c : cells_) {
    rows = std::max(rows, c.row);
    cols = std::max(cols, c.col);
  }
  row_masks_.assign(rows, 0);
  col_masks_.assign(cols, 0);
  for (const Cell& c : cells_) {
    row_masks_[c.row - 1] |= std::uint64_t{1} << (c.col - 1);
    col_masks_[c.col - 1] |= std::uint64_t{1} << (c.row - 1);
  }
}

Diagram Diagram::from_partition(std::span<const int> parts) {
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 1; j <= parts[i]; ++j) cells.push_back({static_cast<int>(i) + 1, j});
  return Diagram(std::move(cells));
}

Diagram Diagram::from_partition(std::initializer_list<int> parts) {
  return from_partition(std::span<const int>(parts.begin(), parts.size()));
}

Diagram Diagram::from_row_masks(std::span<const std::uint64_t> row_masks) {
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < row_masks.size(); ++r)
    for (int j = 0; j < 64; ++j)
      if ((row_masks[r] >> j) & 1U) cells.push_back({static_cast<int>(r) + 1, j + 1});
  return Diagram(std::move(cells));
}

bool Diagram::contains(Cell c) const {
  if (c.row < 1 || c.row > num_rows() || c.col < 1 || c.col > num_cols()) return false;
  return (row_masks_[c.row - 1] >> (c.col - 1)) & 1U;
}

int Diagram::index_of(Cell c) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
  if (it == cells_.end() || *it != c) return -1;
  return static_cast<int>(it - cells_.begin());
}

std::uint64_t Diagram::row_mask(int row) const {
  if (row < 1 || row > num_rows()) return 0;
  return row_masks_[row - 1];
}

std::uint64_t Diagram::col_mask(int col) const {
  if (col < 1 || col > num_cols()) return 0;
  return col_masks_[col - 1];
}

int Diagram::row_length(int row) const { return std::popcount(row_mask(row)); }
int Diagram::col_length(int col) const { return std::popcount(col_mask(col)); }

std::vector<int> Diagram::occupied_rows() const {
  std::vector<int> out;
  for (int r = 1; r <= num_rows(); ++r)
    if (row_masks_[r - 1] != 0) out.push_back(r);
  return out;
}

std::vector<int> Diagram::occupied_cols() const {
  std::vector<int> out;
  for (int c = 1; c <= num_cols(); ++c)
    if (col_masks_[c - 1] != 0) out.push_back(c);
  return out;
}

std::vector<Cell> Diagram::row_cells(int row) const {
  std::vector<Cell> out;
  for (const Cell& c : cells_)
    if (c.row == row) out.push_back(c);
  return out;
}

std::vector<Cell> Diagram::col_cells(int col) const {
  std::vector<Cell> out;
  for (const Cell& c : cells_)
    if (c.col == col) out.push_back(c);
  return out;
}

Diagram Diagram::without(Cell c) const {
  std::vector<Cell> cells;
  cells.reserve(cells_.size());
  for (const Cell& x : cells_)
    if (x != c) cells.push_back(x);
  return Diagram(std::move(cells));
}

Diagram Diagram::with(Cell c) const {
  std::vector<Cell> cells = cells_;
  cells.push_back(c);
  return Diagram(std::move(cells));
}

bool Diagram::is_young() const {
  int prev = 64;
  for (int r = 1; r <= num_rows(); ++r) {
    const std::uint64_t m = row_masks_[r - 1];
    const int len = std::popcount(m);
    if (len == 0 || len > prev) return false;
    if (m != (len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1)) return false;
    prev = len;
  }
  return true;
}

// ---------------------------------------------------------------------------
// ASCII form

Diagram parse_diagram(const std::string& text) {
  std::vector<Cell> cells;
  int line = 1;
  int col = 1;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char ch = text[k];
    if (ch == '\n') {
      ++line;
      col = 1;
      continue;
    }
    if (ch == '\r') continue;
    if (ch == '#') {
      cells.push_back({line, col});
    } else if (ch != '.') {
      throw ParseError(std::string("illegal character '") + ch + "' in diagram", line, col);
    }
    ++col;
  }
  return Diagram(std::move(cells));
}

std::string render_diagram(const Diagram& d) {
  std::string out;
  for (int r = 1; r <= d.num_rows(); ++r) {
    for (int c = 1; c <= d.num_cols(); ++c) out.push_back(d.contains({r, c}) ? '#' : '.');
    out.push_back('\n');
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form
//
// Reading the 0/1 matrix row by row, a cell list is lexicographically smaller
// exactly when the bit string is larger (1 > 0). For a fixed row order the
// best column order sorts columns by their bit vectors, so the search only
// ranges over row orders: rows are chosen one at a time, keeping every
// partial order whose next row string is maximal, with columns refined into
// an ordered partition as rows are added.

namespace {

struct SearchState {
  std::uint64_t chosen = 0;
  std::vector<int> order;
  std::vector<std::uint64_t> classes;
};

struct Compact {
  std::vector<int> rows;  // original row indices
  std::vector<int> cols;  // original col indices
  std::vector<std::uint64_t> masks;  // per compact row, bits over compact columns
};

Compact compact(const Diagram& d) {
  Compact out;
  out.rows = d.occupied_rows();
  out.cols = d.occupied_cols();
  std::vector<int> col_pos(d.num_cols() + 1, -1);
  for (std::size_t k = 0; k < out.cols.size(); ++k) col_pos[out.cols[k]] = static_cast<int>(k);
  for (int r : out.rows) {
    std::uint64_t m = 0;
    for (int c = 1; c <= d.num_cols(); ++c)
      if (d.contains({r, c})) m |= std::uint64_t{1} << col_pos[c];
    out.masks.push_back(m);
  }
  return out;
}

}  // namespace

CanonicalForm canonical_form(const Diagram& d) {
  CanonicalForm out;
  out.row_perm.assign(d.num_rows(), 0);
  out.col_perm.assign(d.num_cols(), 0);
  if (d.empty()) return out;

  const Compact cp = compact(d);
  const int nr = static_cast<int>(cp.rows.size());
  const int nc = static_cast<int>(cp.cols.size());
  const std::uint64_t all_cols = nc == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nc) - 1;

  std::vector<SearchState> states(1);
  states[0].classes.push_back(all_cols);
  std::vector<std::uint64_t> strings;

  for (int depth = 0; depth < nr; ++depth) {
    std::uint64_t best = 0;
    bool have_best = false;
    std::vector<SearchState> next;
    std::set<std::pair<std::uint64_t, std::vector<std::uint64_t>>> seen;
    for (const SearchState& st : states) {
      for (int r = 0; r < nr; ++r) {
        if ((st.chosen >> r) & 1U) continue;
        // Identical unchosen rows are interchangeable; try only the first.
        bool dup = false;
        for (int q = 0; q < r; ++q)
          if (!((st.chosen >> q) & 1U) && cp.masks[q] == cp.masks[r]) {
            dup = true;
            break;
          }
        if (dup) continue;
        std::uint64_t s = 0;
        int pos = 0;
        std::vector<std::uint64_t> refined;
        for (std::uint64_t k : st.classes) {
          const std::uint64_t in = k & cp.masks[r];
          const std::uint64_t outside = k & ~cp.masks[r];
          const int cnt = std::popcount(in);
          for (int t = 0; t < cnt; ++t) s |= std::uint64_t{1} << (nc - 1 - (pos + t));
          pos += std::popcount(k);
          if (in) refined.push_back(in);
          if (outside) refined.push_back(outside);
        }
        if (have_best && s < best) continue;
        if (!have_best || s > best) {
          best = s;
          have_best = true;
          next.clear();
          seen.clear();
        }
        const std::uint64_t chosen = st.chosen | (std::uint64_t{1} << r);
        if (!seen.insert({chosen, refined}).second) continue;
        SearchState ns;
        ns.chosen = chosen;
        ns.order = st.order;
        ns.order.push_back(r);
        ns.classes = std::move(refined);
        next.push_back(std::move(ns));
      }
    }
    strings.push_back(best);
    states = std::move(next);
  }

  const SearchState& win = states.front();
  std::vector<int> col_position(nc, -1);
  int pos = 0;
  for (std::uint64_t k : win.classes)
    for (int c = 0; c < nc; ++c)
      if ((k >> c) & 1U) col_position[c] = pos++;

  std::vector<Cell> cells;
  for (int r = 0; r < nr; ++r)
    for (int p = 0; p < nc; ++p)
      if ((strings[r] >> (nc - 1 - p)) & 1U) cells.push_back({r + 1, p + 1});
  out.diagram = Diagram(std::move(cells));
  for (int k = 0; k < nr; ++k) out.row_perm[cp.rows[win.order[k]] - 1] = k + 1;
  for (int c = 0; c < nc; ++c) out.col_perm[cp.cols[c] - 1] = col_position[c] + 1;
  return out;
}

std::string canonical_key(const Diagram& d) {
  const Diagram c = canonical_form(d).diagram;
  std::string key;
  key.push_back(static_cast<char>(c.num_rows()));
  key.push_back(static_cast<char>(c.num_cols()));
  for (int r = 1; r <= c.num_rows(); ++r) {
    const std::uint64_t m = c.row_mask(r);
    for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>((m >> (8 * b)) & 0xFF));
  }
  return key;
}

bool equivalent(const Diagram& a, const Diagram& b) {
  return a.size() == b.size() && canonical_form(a).diagram == canonical_form(b).diagram;
}

Diagram permute_diagram(const Diagram& d, std::span<const int> row_perm, std::span<const int> col_perm) {
  std::vector<Cell> cells;
  for (const Cell& c : d.cells()) {
    const int r = row_perm[c.row - 1];
    const int k = col_perm[c.col - 1];
    if (r < 1 || k < 1) throw DomainError("permutation does not cover cell " + to_string(c));
    cells.push_back({r, k});
  }
  return Diagram(std::move(cells));
}

Diagram induced_subdiagram(const Diagram& d, std::span<const int> rows, std::span<const int> cols) {
  std::vector<int> rs(rows.begin(), rows.end());
  std::vector<int> cs(cols.begin(), cols.end());
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (d.contains({rs[i], cs[j]})) cells.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
  return Diagram(std::move(cells));
}

// ---------------------------------------------------------------------------
// Maximal rectangles

std::vector<int> Rectangle::row_list() const {
  std::vector<int> out;
  for (int r = 0; r < 64; ++r)
    if ((rows >> r) & 1U) out.push_back(r + 1);
  return out;
}

std::vector<int> Rectangle::col_list() const {
  std::vector<int> out;
  for (int c = 0; c < 64; ++c)
    if ((cols >> c) & 1U) out.push_back(c + 1);
  return out;
}

std::vector<Rectangle> maximal_rectangles(const Diagram& d) {
  // Column sets of maximal rectangles are exactly the nonempty intersections
  // of row masks; each determines its row set as all rows containing it.
  std::set<std::uint64_t> closed;
  for (int r = 1; r <= d.num_rows(); ++r) {
    const std::uint64_t m = d.row_mask(r);
    if (m == 0) continue;
    std::vector<std::uint64_t> add{m};
    for (std::uint64_t c : closed)
      if ((c & m) != 0) add.push_back(c & m);
    closed.insert(add.begin(), add.end());
  }
  std::vector<Rectangle> out;
  for (std::uint64_t cols : closed) {
    std::uint64_t rows = 0;
    for (int r = 1; r <= d.num_rows(); ++r)
      if ((d.row_mask(r) & cols) == cols) rows |= std::uint64_t{1} << (r - 1);
    out.push_back({rows, cols});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Northwest diagrams

namespace {

// Rows `upper` above `lower` violate the northwest condition.
bool northwest_violation(std::uint64_t upper, std::uint64_t lower) {
  if (upper == 0) return false;
  const int top = 63 - std::countl_zero(upper);
  const std::uint64_t below = (std::uint64_t{1} << top) - 1;
  return (lower & ~upper & below) != 0;
}

bool proper_initial_segment(std::uint64_t a, std::uint64_t b) {
  if (a == b || (a & ~b) != 0) return false;
  std::uint64_t prefix = 0;
  std::uint64_t rest = b;
  for (int k = std::popcount(a); k > 0; --k) {
    const std::uint64_t low = rest & (~rest + 1);
    prefix |= low;
    rest &= ~low;
  }
  return prefix == a;
}

bool order_search(const std::vector<std::uint64_t>& masks, std::vector<int>& order, std::vector<bool>& used) {
  const int n = static_cast<int>(masks.size());
  if (static_cast<int>(order.size()) == n) return true;
  for (int r = 0; r < n; ++r) {
    if (used[r]) continue;
    bool dup = false;
    for (int q = 0; q < r; ++q)
      if (!used[q] && masks[q] == masks[r]) {
        dup = true;
        break;
      }
    if (dup) continue;
    bool ok = true;
    for (int u : order) {
      if (northwest_violation(masks[u], masks[r]) || proper_initial_segment(masks[r], masks[u])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    used[r] = true;
    order.push_back(r);
    if (order_search(masks, order, used)) return true;
    order.pop_back();
    used[r] = false;
  }
  return false;
}

}  // namespace

bool has_northwest_property(const Diagram& d) {
  for (int a = 1; a <= d.num_rows(); ++a)
    for (int b = a + 1; b <= d.num_rows(); ++b)
      if (northwest_violation(d.row_mask(a), d.row_mask(b))) return false;
  return true;
}

bool in_initial_segment_order(const Diagram& d) {
  for (int a = 1; a <= d.num_rows(); ++a)
    for (int b = a + 1; b <= d.num_rows(); ++b)
      if (proper_initial_segment(d.row_mask(b), d.row_mask(a))) return false;
  return true;
}

NorthwestCheck is_northwest(const Diagram& d) {
  NorthwestCheck out;
  if (!has_northwest_property(d)) return out;
  out.northwest = true;
  std::vector<std::uint64_t> masks;
  for (int r = 1; r <= d.num_rows(); ++r) masks.push_back(d.row_mask(r));
  std::vector<int> order;
  std::vector<bool> used(masks.size(), false);
  if (!order_search(masks, order, used))
    throw std::logic_error("northwest diagram without an initial segment row order");
  for (int r : order) out.row_order.push_back(r + 1);
  return out;
}

Diagram reorder_rows(const Diagram& d, std::span<const int> order) {
  std::vector<int> row_perm(d.num_rows(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) row_perm[order[k] - 1] = static_cast<int>(k) + 1;
  std::vector<int> col_perm(d.num_cols());
  std::iota(col_perm.begin(), col_perm.end(), 1);
  return permute_diagram(d, row_perm, col_perm);
}

// ---------------------------------------------------------------------------
// Graph view

BipartiteView bipartite_view(const Diagram& d) {
  BipartiteView g;
  g.row_vertices = d.occupied_rows();
  g.col_vertices = d.occupied_cols();
  for (const Cell& c : d.cells()) g.edges.emplace_back(c.row, c.col);
  return g;
}

bool is_forest(const Diagram& d) {
  const int nr = d.num_rows();
  std::vector<int> parent(nr + d.num_cols());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Cell& c : d.cells()) {
    const int a = find(c.row - 1);
    const int b = find(nr + c.col - 1);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

namespace {

struct InducedCycleSearch {
  std::vector<std::vector<bool>> adj;
  std::vector<std::vector<int>> nbrs;
  std::vector<int> path;
  std::vector<bool> on_path;
  int start = 0;

  bool extend() {
    const int last = path.back();
    for (int u : nbrs[last]) {
      if (u <= start || on_path[u]) continue;
      bool chord = false;
      for (std::size_t k = 1; k + 1 < path.size(); ++k)
        if (adj[u][path[k]]) {
          chord = true;
          break;
        }
      if (chord) continue;
      if (path.size() >= 2 && adj[u][start]) {
        if (path.size() + 1 >= 6) return true;
        continue;
      }
      path.push_back(u);
      on_path[u] = true;
      if (extend()) return true;
      on_path[u] = false;
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

bool is_gamma_freeable(const Diagram& d) {
  const int nr = d.num_rows();
  const int nv = nr + d.num_cols();
  InducedCycleSearch s;
  s.adj.assign(nv, std::vector<bool>(nv, false));
  s.nbrs.assign(nv, {});
  for (const Cell& c : d.cells()) {
    const int a = c.row - 1;
    const int b = nr + c.col - 1;
    s.adj[a][b] = s.adj[b][a] = true;
    s.nbrs[a].push_back(b);
    s.nbrs[b].push_back(a);
  }
  s.on_path.assign(nv, false);
  for (int v = 0; v < nv; ++v) {
    s.start = v;
    s.path = {v};
    s.on_path[v] = true;
    const bool found = s.extend();
    s.on_path[v] = false;
    if (found) return false;
  }
  return true;
}

bool is_gamma_free(const Diagram& d) {
  for (const Cell& a : d.cells())
    for (const Cell& b : d.cells()) {
      if (b.row != a.row || b.col <= a.col) continue;
      for (const Cell& c : d.cells())
        if (c.col == a.col && c.row > a.row && !d.contains({c.row, b.col})) return false;
    }
  return true;
}

}  // namespace specht
