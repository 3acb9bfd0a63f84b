#include "specht/transversal.hpp"

#include <algorithm>
#include <functional>

#include "specht/errors.hpp"

namespace specht {

BoxSet sorted_boxes(BoxSet b) {
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

namespace {

void require_subset(const Diagram& d, const BoxSet& b) {
  for (const Cell& c : b)
    if (!d.contains(c)) throw DomainError("box " + to_string(c) + " is not in the diagram");
}

}  // namespace

TransversalResult is_special_transversal(const Diagram& d, const BoxSet& b) {
  require_subset(d, b);
  TransversalResult out;
  const BoxSet boxes = sorted_boxes(b);
  const int k = static_cast<int>(boxes.size());
  for (int p = 0; p < k; ++p)
    for (int q = p + 1; q < k; ++q) {
      if (boxes[p].row == boxes[q].row) {
        out.reason = "boxes " + to_string(boxes[p]) + " and " + to_string(boxes[q]) + " share a row";
        return out;
      }
      if (boxes[p].col == boxes[q].col) {
        out.reason = "boxes " + to_string(boxes[p]) + " and " + to_string(boxes[q]) + " share a column";
        return out;
      }
    }
  // before[q] lists boxes that must come before q.
  std::vector<std::vector<int>> before(k);
  std::vector<int> indegree(k, 0);
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q)
      if (p != q && d.contains({boxes[q].row, boxes[p].col})) {
        before[q].push_back(p);
        ++indegree[q];
      }
  std::vector<bool> placed(k, false);
  while (static_cast<int>(out.order.size()) < k) {
    int next = -1;
    for (int q = 0; q < k && next < 0; ++q)
      if (!placed[q] && indegree[q] == 0) next = q;
    if (next < 0) break;
    placed[next] = true;
    out.order.push_back(boxes[next]);
    for (int q = 0; q < k; ++q)
      if (!placed[q] && std::find(before[q].begin(), before[q].end(), next) != before[q].end()) --indegree[q];
  }
  if (static_cast<int>(out.order.size()) == k) {
    out.accepted = true;
    return out;
  }
  // Walk predecessors among unplaced boxes until one repeats.
  int cur = 0;
  while (placed[cur]) ++cur;
  std::vector<int> walk;
  std::vector<int> seen_at(k, -1);
  while (seen_at[cur] < 0) {
    seen_at[cur] = static_cast<int>(walk.size());
    walk.push_back(cur);
    for (int p : before[cur])
      if (!placed[p]) {
        cur = p;
        break;
      }
  }
  out.reason = "cyclic ordering constraints:";
  for (std::size_t t = seen_at[cur]; t < walk.size(); ++t) out.reason += " " + to_string(boxes[walk[t]]);
  out.order.clear();
  return out;
}

bool is_special_transversal_graph(const Diagram& d, const BoxSet& b) {
  require_subset(d, b);
  const BoxSet boxes = sorted_boxes(b);
  for (std::size_t p = 0; p < boxes.size(); ++p)
    for (std::size_t q = p + 1; q < boxes.size(); ++q)
      if (boxes[p].row == boxes[q].row || boxes[p].col == boxes[q].col) return false;
  // Matching edges point row -> column, all others column -> row; an
  // alternating cycle is then exactly a directed cycle.
  const int nr = d.num_rows();
  const int nv = nr + d.num_cols();
  std::vector<std::vector<int>> out(nv);
  for (const Cell& c : d.cells()) {
    const int r = c.row - 1;
    const int k = nr + c.col - 1;
    if (std::binary_search(boxes.begin(), boxes.end(), c))
      out[r].push_back(k);
    else
      out[k].push_back(r);
  }
  std::vector<int> state(nv, 0);
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (int u : out[v]) {
      if (state[u] == 1) return true;
      if (state[u] == 0 && dfs(u)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (int v = 0; v < nv; ++v)
    if (state[v] == 0 && dfs(v)) return false;
  return true;
}

bool is_exact_hitting_set(const Diagram& d, const BoxSet& b) {
  require_subset(d, b);
  const BoxSet boxes = sorted_boxes(b);
  for (const Rectangle& rect : maximal_rectangles(d)) {
    int hits = 0;
    for (const Cell& c : boxes)
      if (rect.contains(c)) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

std::vector<BoxSet> exact_hitting_sets(const Diagram& d) {
  const std::vector<Rectangle> rects = maximal_rectangles(d);
  const std::vector<Cell>& cells = d.cells();
  const int nrect = static_cast<int>(rects.size());
  std::vector<std::vector<int>> cell_rects(cells.size());
  for (std::size_t k = 0; k < cells.size(); ++k)
    for (int r = 0; r < nrect; ++r)
      if (rects[r].contains(cells[k])) cell_rects[k].push_back(r);

  std::vector<BoxSet> out;
  std::vector<char> covered(nrect, 0);
  BoxSet chosen;
  std::function<void(int)> search = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(sorted_boxes(chosen));
      return;
    }
    int best = -1;
    std::vector<int> best_cands;
    for (int r = 0; r < nrect; ++r) {
      if (covered[r]) continue;
      std::vector<int> cands;
      for (std::size_t k = 0; k < cells.size(); ++k) {
        if (!rects[r].contains(cells[k])) continue;
        bool free = true;
        for (int q : cell_rects[k])
          if (covered[q]) {
            free = false;
            break;
          }
        if (free) cands.push_back(static_cast<int>(k));
      }
      if (best < 0 || cands.size() < best_cands.size()) {
        best = r;
        best_cands = std::move(cands);
        if (best_cands.empty()) break;
      }
    }
    for (int k : best_cands) {
      for (int q : cell_rects[k]) covered[q] = 1;
      chosen.push_back(cells[k]);
      search(remaining - static_cast<int>(cell_rects[k].size()));
      chosen.pop_back();
      for (int q : cell_rects[k]) covered[q] = 0;
    }
  };
  search(nrect);
  std::sort(out.begin(), out.end());
  return out;
}

BoxSet northwest_branching_set(const Diagram& d) {
  if (!has_northwest_property(d)) throw DomainError("diagram is not northwest");
  if (!in_initial_segment_order(d)) throw DomainError("rows are not in initial segment order");
  BoxSet out;
  for (int r = 1; r <= d.num_rows(); ++r)
    for (const Cell& c : d.row_cells(r)) {
      const bool bottommost = (d.col_mask(c.col) >> c.row) == 0;
      if (bottommost) {
        out.push_back(c);
        break;
      }
    }
  return out;
}

std::vector<BoxSet> almost_perfect_matchings(const Diagram& d) {
  if (!is_forest(d)) throw DomainError("diagram is not a forest");
  const std::vector<Cell>& cells = d.cells();
  const int n = static_cast<int>(cells.size());
  const int nr = d.num_rows();
  std::vector<int> degree(nr + d.num_cols(), 0);
  for (const Cell& c : cells) {
    ++degree[c.row - 1];
    ++degree[nr + c.col - 1];
  }
  std::vector<int> left(degree);  // undecided edges per vertex
  std::vector<int> used(degree.size(), 0);
  std::vector<BoxSet> out;
  BoxSet chosen;
  std::function<void(int)> search = [&](int k) {
    if (k == n) {
      for (std::size_t v = 0; v < degree.size(); ++v)
        if (degree[v] > 1 && used[v] != 1) return;
      out.push_back(chosen);
      return;
    }
    const int a = cells[k].row - 1;
    const int b = nr + cells[k].col - 1;
    const bool isolated = degree[a] == 1 && degree[b] == 1;
    --left[a];
    --left[b];
    const bool can_take = (degree[a] == 1 || used[a] == 0) && (degree[b] == 1 || used[b] == 0);
    if (can_take) {
      ++used[a];
      ++used[b];
      chosen.push_back(cells[k]);
      search(k + 1);
      chosen.pop_back();
      --used[a];
      --used[b];
    }
    const bool can_skip = !isolated && !(degree[a] > 1 && used[a] == 0 && left[a] == 0) &&
                          !(degree[b] > 1 && used[b] == 0 && left[b] == 0);
    if (can_skip) search(k + 1);
    ++left[a];
    ++left[b];
  };
  search(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace specht
