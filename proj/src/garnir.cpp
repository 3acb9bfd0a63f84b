#include "specht/garnir.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>

#include "specht/errors.hpp"
#include "specht/linalg.hpp"

namespace specht {

int GarnirDatum::total() const {
  int t = 0;
  for (const BoxSet& s : sets) t += static_cast<int>(s.size());
  return t;
}

int GarnirDatum::set_of(Cell c) const {
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (std::find(sets[i].begin(), sets[i].end(), c) != sets[i].end()) return static_cast<int>(i);
  return -1;
}

std::string to_string(const GarnirDatum& g) {
  std::string out = "columns(";
  for (std::size_t i = 0; i < g.columns.size(); ++i) out += (i ? "," : "") + std::to_string(g.columns[i]);
  out += ")";
  for (const BoxSet& s : g.sets) {
    out += " {";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + to_string(s[i]);
    out += "}";
  }
  return out;
}

void check_garnir_structure(const Diagram& d, const GarnirDatum& g) {
  if (g.columns.size() < 2) throw DomainError("Garnir datum needs at least two columns");
  if (g.sets.size() + 1 != g.columns.size()) throw DomainError("Garnir datum needs one set per adjacent column pair");
  for (std::size_t i = 0; i < g.columns.size(); ++i) {
    if (g.columns[i] < 1) throw DomainError("column indices are 1-based");
    for (std::size_t j = i + 1; j < g.columns.size(); ++j)
      if (g.columns[i] == g.columns[j]) throw DomainError("Garnir columns must be distinct");
  }
  std::vector<Cell> seen;
  for (std::size_t i = 0; i < g.sets.size(); ++i)
    for (const Cell& c : g.sets[i]) {
      if (!d.contains(c)) throw DomainError("box " + to_string(c) + " is not in the diagram");
      if (c.col != g.columns[i] && c.col != g.columns[i + 1])
        throw DomainError("box " + to_string(c) + " lies outside the columns of its set");
      if (std::find(seen.begin(), seen.end(), c) != seen.end())
        throw DomainError("box " + to_string(c) + " used by two sets");
      seen.push_back(c);
    }
}

int garnir_bound(const Diagram& d, const GarnirDatum& g) {
  int sum = 0;
  std::uint64_t common = ~std::uint64_t{0};
  for (int j : g.columns) {
    sum += d.col_length(j);
    common &= d.col_mask(j);
  }
  return sum - std::popcount(common);
}

bool validate_garnir(const Diagram& d, const GarnirDatum& g) {
  check_garnir_structure(d, g);
  return g.total() > garnir_bound(d, g);
}

bool is_minimal(const Diagram& d, const GarnirDatum& g) {
  if (!validate_garnir(d, g)) return false;
  const std::size_t m = g.sets.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      if (i == 0 && j + 1 == m) continue;
      GarnirDatum sub;
      sub.columns.assign(g.columns.begin() + i, g.columns.begin() + j + 2);
      sub.sets.assign(g.sets.begin() + i, g.sets.begin() + j + 1);
      if (sub.total() > garnir_bound(d, sub)) return false;
    }
  return true;
}

GarnirDatum without_box(const GarnirDatum& g, Cell x) {
  GarnirDatum out = g;
  for (BoxSet& s : out.sets) s.erase(std::remove(s.begin(), s.end(), x), s.end());
  return out;
}

GarnirDatum reversed(const GarnirDatum& g) {
  GarnirDatum out = g;
  std::reverse(out.columns.begin(), out.columns.end());
  std::reverse(out.sets.begin(), out.sets.end());
  return out;
}

FactoredElement stab_signed_sum(const Diagram& d, const GarnirDatum& g) {
  FactoredElement f;
  f.degree = static_cast<int>(d.size());
  for (const BoxSet& s : g.sets) {
    std::vector<int> pos;
    for (const Cell& c : sorted_boxes(s)) pos.push_back(d.index_of(c) + 1);
    for (auto& x : symmetrizer(f.degree, pos, true).factors) f.factors.push_back(std::move(x));
  }
  return f;
}

AlgebraElement garnir_element(const Tableau& t, const GarnirDatum& g) {
  const Diagram& d = t.shape();
  if (!validate_garnir(d, g)) throw DomainError("Garnir datum fails the inequality: " + to_string(g));
  AlgebraElement e = AlgebraElement::single(t.as_permutation());
  for (const AlgebraElement& f : stab_signed_sum(d, g).factors) e = e * f;
  for (const AlgebraElement& f : column_group_signed_sum(d).factors) e = e * f;
  for (const AlgebraElement& f : row_group_sum(d).factors) e = e * f;
  return e;
}

namespace {

// Left coset representatives of (stabilizer meet column group) in the
// stabilizer of one set: each representative sends the boxes of the first
// column part onto a chosen subset, keeping relative order.
struct CosetRep {
  std::vector<int> from;  // positions, 1-based
  std::vector<int> to;
  int sign = 1;
};

std::vector<CosetRep> set_coset_reps(const Diagram& d, const BoxSet& set, std::uint64_t& stabilizer_meet_columns) {
  const BoxSet boxes = sorted_boxes(set);
  std::vector<int> pos;
  for (const Cell& c : boxes) pos.push_back(d.index_of(c) + 1);
  std::vector<int> first, rest;  // indices into pos
  int lowest = boxes.empty() ? 0 : boxes.front().col;
  for (const Cell& c : boxes) lowest = std::min(lowest, c.col);
  for (std::size_t k = 0; k < boxes.size(); ++k) (boxes[k].col == lowest ? first : rest).push_back(static_cast<int>(k));
  stabilizer_meet_columns = factorial(static_cast<int>(first.size())) * factorial(static_cast<int>(rest.size()));

  std::vector<CosetRep> reps;
  const int total = static_cast<int>(pos.size());
  std::vector<bool> choose(total, false);
  std::fill(choose.begin(), choose.begin() + static_cast<long>(first.size()), true);
  // Iterate subsets of size |first| in lexicographic order of indicator.
  std::sort(choose.begin(), choose.end(), std::greater<>());
  do {
    std::vector<int> image(total);  // image[k] = index that k maps to
    std::vector<int> chosen, other;
    for (int k = 0; k < total; ++k) (choose[k] ? chosen : other).push_back(k);
    for (std::size_t t = 0; t < first.size(); ++t) image[first[t]] = chosen[t];
    for (std::size_t t = 0; t < rest.size(); ++t) image[rest[t]] = other[t];
    int inversions = 0;
    for (int a = 0; a < total; ++a)
      for (int b = a + 1; b < total; ++b)
        if (image[a] > image[b]) ++inversions;
    CosetRep rep;
    rep.sign = inversions % 2 == 0 ? 1 : -1;
    for (int k = 0; k < total; ++k) {
      rep.from.push_back(pos[k]);
      rep.to.push_back(pos[image[k]]);
    }
    reps.push_back(std::move(rep));
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return reps;
}

// Calls visit(sigma, sign) for each product of per-set coset representatives.
void for_each_coset_rep(const Diagram& d, const GarnirDatum& g, std::uint64_t& index,
                        const std::function<void(const Permutation&, int)>& visit) {
  const int n = static_cast<int>(d.size());
  std::vector<std::vector<CosetRep>> per_set;
  index = 1;
  for (const BoxSet& s : g.sets) {
    std::uint64_t h = 1;
    per_set.push_back(set_coset_reps(d, s, h));
    index *= h;
  }
  std::vector<int> img(n);
  for (int k = 0; k < n; ++k) img[k] = k + 1;
  std::function<void(std::size_t, int)> rec = [&](std::size_t s, int sign) {
    if (s == per_set.size()) {
      visit(Permutation(img), sign);
      return;
    }
    for (const CosetRep& r : per_set[s]) {
      for (std::size_t k = 0; k < r.from.size(); ++k) img[r.from[k] - 1] = r.to[k];
      rec(s + 1, sign * r.sign);
    }
    for (int from : per_set[s].front().from) img[from - 1] = from;
  };
  rec(0, 1);
}

}  // namespace

AlgebraElement coset_garnir_element(const Tableau& t, const GarnirDatum& g) {
  const Diagram& d = t.shape();
  if (!validate_garnir(d, g)) throw DomainError("Garnir datum fails the inequality: " + to_string(g));
  AlgebraElement z(static_cast<int>(d.size()));
  std::uint64_t index = 1;
  for_each_coset_rep(d, g, index, [&](const Permutation& sigma, int sign) { z.add(sigma, sign); });
  AlgebraElement e = AlgebraElement::single(t.as_permutation()) * z;
  for (const AlgebraElement& f : column_group_signed_sum(d).factors) e = e * f;
  for (const AlgebraElement& f : row_group_sum(d).factors) e = e * f;
  return e;
}

DenseVector garnir_element_dense(const Tableau& t, const GarnirDatum& g, const DenseVector& symmetrizer) {
  const PermutationSpace& space = permutation_space(t.size());
  const DenseVector v = left_apply(space, stab_signed_sum(t.shape(), g), symmetrizer);
  return left_multiply(space, t.as_permutation(), v);
}

// ---------------------------------------------------------------------------

ColumnQuotient::ColumnQuotient(Diagram d) : d_(std::move(d)) {
  for (int c : d_.occupied_cols()) {
    std::vector<int> idx;
    for (const Cell& x : d_.col_cells(c)) idx.push_back(d_.index_of(x));
    columns_.push_back(std::move(idx));
  }
}

std::uint64_t ColumnQuotient::dimension() const {
  std::uint64_t denom = 1;
  for (const auto& col : columns_) denom *= factorial(static_cast<int>(col.size()));
  return factorial(static_cast<int>(d_.size())) / denom;
}

std::pair<ColumnQuotient::Key, int> ColumnQuotient::normalize(const std::vector<int>& labels) const {
  Key k(labels.begin(), labels.end());
  int sign = 1;
  for (const auto& col : columns_) {
    // Insertion sort down the column, counting swaps.
    for (std::size_t a = 1; a < col.size(); ++a)
      for (std::size_t b = a; b > 0 && k[col[b - 1]] > k[col[b]]; --b) {
        std::swap(k[col[b - 1]], k[col[b]]);
        sign = -sign;
      }
  }
  return {std::move(k), sign};
}

Tableau ColumnQuotient::tableau(const Key& k) const { return Tableau(d_, std::vector<int>(k.begin(), k.end())); }

void ColumnQuotient::add(Vector& v, const std::vector<int>& labels, const Rational& c) const {
  if (c == 0) return;
  auto [k, sign] = normalize(labels);
  auto [it, inserted] = v.try_emplace(std::move(k), sign > 0 ? c : Rational(-c));
  if (!inserted) {
    it->second += sign > 0 ? c : Rational(-c);
    if (it->second == 0) v.erase(it);
  }
}

void ColumnQuotient::add_stab(Vector& v, const Tableau& t, const GarnirDatum& g, const Rational& c) const {
  if (c == 0) return;
  std::uint64_t index = 1;
  std::vector<std::pair<Permutation, int>> reps;
  for_each_coset_rep(d_, g, index, [&](const Permutation& sigma, int sign) { reps.emplace_back(sigma, sign); });
  const Rational scale = c * Rational(static_cast<long long>(index));
  for (const auto& [sigma, sign] : reps) add(v, t.act_right(sigma).labels(), sign > 0 ? scale : Rational(-scale));
}

ColumnQuotient::Vector ColumnQuotient::stab(const Tableau& t, const GarnirDatum& g) const {
  Vector v;
  add_stab(v, t, g, 1);
  return v;
}

std::vector<ColumnQuotient::Key> ColumnQuotient::basis() const {
  const int n = static_cast<int>(d_.size());
  std::vector<Key> out;
  std::vector<int> labels(n);
  // Distribute labels column by column: each column takes an increasing subset.
  std::vector<bool> used(n + 1, false);
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == columns_.size()) {
      out.emplace_back(labels.begin(), labels.end());
      return;
    }
    const std::vector<int>& col = columns_[c];
    std::function<void(std::size_t, int)> fill = [&](std::size_t k, int min_label) {
      if (k == col.size()) {
        rec(c + 1);
        return;
      }
      for (int l = min_label; l <= n; ++l) {
        if (used[l]) continue;
        used[l] = true;
        labels[col[k]] = l;
        fill(k + 1, l + 1);
        used[l] = false;
      }
    };
    fill(0, 1);
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

void axpy(ColumnQuotient::Vector& y, const Rational& a, const ColumnQuotient::Vector& x) {
  if (a == 0) return;
  for (const auto& [k, c] : x) {
    auto [it, inserted] = y.try_emplace(k, a * c);
    if (!inserted) {
      it->second += a * c;
      if (it->second == 0) y.erase(it);
    }
  }
}

bool is_zero(const ColumnQuotient::Vector& v) { return v.empty(); }

// ---------------------------------------------------------------------------

std::string to_string(MoveStep::Kind k) {
  switch (k) {
    case MoveStep::Kind::SameColumn: return "same_column";
    case MoveStep::Kind::CrossColumn: return "cross_column";
    case MoveStep::Kind::Transfer: return "transfer";
    case MoveStep::Kind::Vanish: return "vanish";
  }
  return "?";
}

bool measure_step(const ColumnQuotient& q, const Tableau& u, MoveStep& step) {
  using V = ColumnQuotient::Vector;
  if (step.kind == MoveStep::Kind::Transfer) {
    step.scalar = 1;
    step.garnir_scalar = 0;
    return step.from == step.to;
  }
  const V lhs = q.stab(u, without_box(step.datum, step.from));
  const V full = q.stab(u, step.datum);
  V moved;
  if (step.kind != MoveStep::Kind::Vanish) moved = q.stab(u.swapped(step.from, step.to), without_box(step.datum, step.to));

  std::vector<ColumnQuotient::Key> keys;
  for (const V* v : std::initializer_list<const V*>{&lhs, &full, &moved})
    for (const auto& [k, c] : *v) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  auto at = [](const V& v, const ColumnQuotient::Key& k) {
    auto it = v.find(k);
    return it == v.end() ? Rational(0) : it->second;
  };
  const auto rows = static_cast<Eigen::Index>(keys.size());
  linalg::Matrix<Rational> a(rows, 2);
  linalg::Vector<Rational> b(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    a(r, 0) = at(moved, keys[r]);
    a(r, 1) = at(full, keys[r]);
    b(r) = at(lhs, keys[r]);
  }
  const auto x = linalg::solve(a, b);
  if (!x) return false;
  step.scalar = step.kind == MoveStep::Kind::Vanish ? Rational(0) : (*x)(0);
  step.garnir_scalar = (*x)(1);
  return true;
}

MoveResult move_relation(const Diagram& d, const GarnirDatum& g, Cell x, Cell y) {
  if (!validate_garnir(d, g)) throw DomainError("Garnir datum fails the inequality: " + to_string(g));
  const int p = g.set_of(x);
  const int target = g.set_of(y);
  if (p < 0) throw DomainError("box " + to_string(x) + " is in no set of the datum");
  if (target < 0) throw DomainError("box " + to_string(y) + " is in no set of the datum");
  const int n = static_cast<int>(d.size());
  const ColumnQuotient q(d);
  Tableau u = Tableau::reference(d);

  MoveResult r;
  r.datum = g;
  r.pi = Permutation(n);
  r.scalar = 1;
  Cell cur = x;
  int s = p;

  auto record = [&](MoveStep st) {
    if (!measure_step(q, u, st)) throw ConsistencyError("rearrangement identity does not hold: " + to_string(st.datum));
    r.steps.push_back(st);
    return st;
  };
  auto within = [&](Cell to) {
    if (to == cur) return;
    MoveStep st;
    st.kind = to.col == cur.col ? MoveStep::Kind::SameColumn : MoveStep::Kind::CrossColumn;
    st.datum = r.datum;
    st.from = cur;
    st.to = to;
    st = record(st);
    r.scalar *= st.scalar;
    u = u.swapped(cur, to);
    r.pi = r.pi * Permutation::transposition(n, d.index_of(cur) + 1, d.index_of(to) + 1);
    cur = to;
  };

  while (s != target) {
    const int next = s < target ? s + 1 : s - 1;
    const int shared = s < target ? g.columns[s + 1] : g.columns[s];
    std::optional<Cell> z;
    if (cur.col == shared) {
      z = cur;
    } else {
      for (const Cell& c : sorted_boxes(r.datum.sets[s]))
        if (c.col == shared && (!z || c.row < z->row)) z = c;
    }
    if (!z) {
      MoveStep st;
      st.kind = MoveStep::Kind::Vanish;
      st.datum = r.datum;
      st.from = st.to = cur;
      record(st);
      r.scalar = 0;
      return r;
    }
    within(*z);
    MoveStep st;
    st.kind = MoveStep::Kind::Transfer;
    st.datum = r.datum;
    st.from = st.to = cur;
    record(st);
    BoxSet& from_set = r.datum.sets[s];
    from_set.erase(std::find(from_set.begin(), from_set.end(), cur));
    r.datum.sets[next].push_back(cur);
    r.datum.sets[next] = sorted_boxes(r.datum.sets[next]);
    s = next;
  }
  within(y);
  return r;
}

}  // namespace specht
