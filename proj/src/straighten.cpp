#include "specht/straighten.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>

#include "specht/errors.hpp"
#include "specht/oracle.hpp"

namespace specht {

namespace {

using QVec = ColumnQuotient::Vector;
using Key = ColumnQuotient::Key;

ChoiceFunction memoized(std::string name, std::function<BoxSet(const Diagram&)> pick, bool classical) {
  struct Memo {
    std::shared_mutex mutex;
    std::map<std::vector<Cell>, BoxSet> sets;
  };
  auto memo = std::make_shared<Memo>();
  ChoiceFunction f;
  f.name = std::move(name);
  f.classical_young = classical;
  f.select = [memo, pick = std::move(pick)](const Diagram& d) {
    {
      std::shared_lock lock(memo->mutex);
      auto it = memo->sets.find(d.cells());
      if (it != memo->sets.end()) return it->second;
    }
    BoxSet b = pick(d);
    std::unique_lock lock(memo->mutex);
    memo->sets.try_emplace(d.cells(), b);
    return b;
  };
  return f;
}

BoxSet corner_set(const Diagram& d) {
  BoxSet out;
  for (const Cell& c : d.cells())
    if (!d.contains({c.row + 1, c.col}) && !d.contains({c.row, c.col + 1})) out.push_back(c);
  return out;
}

Tableau lift(const Tableau& t, const Diagram& d, Cell b) {
  std::vector<std::pair<Cell, int>> entries;
  for (std::size_t k = 0; k < t.shape().size(); ++k) entries.emplace_back(t.shape().cells()[k], t.labels()[k]);
  entries.emplace_back(b, static_cast<int>(d.size()));
  return Tableau::from_cells(d, entries);
}

Tableau strip(const Tableau& t, const Diagram& smaller, Cell b) {
  std::vector<std::pair<Cell, int>> entries;
  for (std::size_t k = 0; k < t.shape().size(); ++k)
    if (t.shape().cells()[k] != b) entries.emplace_back(t.shape().cells()[k], t.labels()[k]);
  return Tableau::from_cells(smaller, entries);
}

void add_to(QVec& v, const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = v.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

/// Representative of [key] with the largest label moved into box b of the same column.
std::pair<Tableau, int> with_top_label_at(const ColumnQuotient& q, const Key& key, Cell b) {
  Tableau t = q.tableau(key);
  const Cell x = t.cell_of(t.size());
  if (x == b) return {t, 1};
  if (x.col != b.col) throw ConsistencyError("largest label left the column of " + to_string(b));
  return {t.swapped(x, b), -1};
}

Rational factorial_q(std::size_t k) {
  Rational f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= Rational(static_cast<long long>(i));
  return f;
}

std::vector<int> column_word(const Diagram& d, const Key& key) {
  std::vector<int> w(key.size());
  for (std::size_t p = 0; p < key.size(); ++p) w[key[p] - 1] = d.cells()[p].col;
  return w;
}

void collect_garnir(const StraighteningTrace& t, std::vector<TraceTerm>& out) {
  for (const TraceStep& s : t.steps) out.insert(out.end(), s.garnir.begin(), s.garnir.end());
}

struct MoveReplay {
  std::vector<TraceStep> details;
  std::vector<TraceTerm> garnir;
  Rational coef;
  Tableau tableau;
  GarnirDatum datum;  // final A'_y
};

/// Applies the elementary steps of mr to coef * [u Stab(g_x)].
MoveReplay replay(const MoveResult& mr, const Tableau& u, const Rational& coef, Cell y) {
  MoveReplay out;
  out.coef = coef;
  out.tableau = u;
  for (const MoveStep& st : mr.steps) {
    if (st.kind == MoveStep::Kind::Transfer) continue;
    TraceStep s;
    s.kind = TraceStep::Kind::Move;
    s.lhs.push_back({out.coef, out.tableau, without_box(st.datum, st.from)});
    const TraceTerm g{out.coef * st.garnir_scalar, out.tableau, st.datum};
    if (g.coef != 0) {
      s.garnir.push_back(g);
      out.garnir.push_back(g);
    }
    if (st.kind == MoveStep::Kind::Vanish) {
      out.details.push_back(std::move(s));
      out.coef = 0;
      return out;
    }
    out.tableau = out.tableau.swapped(st.from, st.to);
    out.coef *= st.scalar;
    s.rhs.push_back({out.coef, out.tableau, without_box(st.datum, st.to)});
    out.details.push_back(std::move(s));
  }
  out.datum = without_box(mr.datum, y);
  return out;
}

class Straightener {
 public:
  Straightener(const ChoiceFunction& choice, Classifier& classifier) : choice_(choice), classifier_(classifier) {}

  std::shared_ptr<StraighteningTrace> solve(const Diagram& d, const QVec& x);

 private:
  struct Level {
    BoxSet branching;
    std::map<Key, std::pair<Tableau, int>> chain_keys;
  };

  const Level& level(const Diagram& d);
  void classical(const ColumnQuotient& q, QVec rest, StraighteningTrace& trace, std::map<Tableau, Rational>& coords);
  /// Rewrites coef * [u Stab(g)] (g invalid in d, largest label in b_i)
  /// into valid Garnir terms plus tableaux with the label in later boxes.
  void rewrite(const ColumnQuotient& q, const BoxSet& bs, std::size_t i, const Tableau& u, const GarnirDatum& g,
               const Rational& coef, TraceStep& step, std::vector<QVec>& groups);
  void place(const ColumnQuotient& q, const BoxSet& bs, std::size_t target, const Rational& coef, const Tableau& u,
             const GarnirDatum& g, TraceStep& step, std::vector<QVec>& groups);

  const ChoiceFunction& choice_;
  Classifier& classifier_;
  std::map<std::vector<Cell>, Level> levels_;
};

const Straightener::Level& Straightener::level(const Diagram& d) {
  auto it = levels_.find(d.cells());
  if (it != levels_.end()) return it->second;
  Level lv;
  lv.branching = ordered_branching_set(d, choice_, classifier_);
  const ColumnQuotient q(d);
  for (const ChainTableau& c : chain_basis(d, choice_, classifier_)) {
    auto [key, sign] = q.normalize(c.tableau.labels());
    lv.chain_keys.emplace(std::move(key), std::make_pair(c.tableau, sign));
  }
  return levels_.emplace(d.cells(), std::move(lv)).first->second;
}

void Straightener::classical(const ColumnQuotient& q, QVec rest, StraighteningTrace& trace,
                             std::map<Tableau, Rational>& coords) {
  const Diagram& d = q.diagram();
  using Item = std::pair<std::vector<int>, Key>;
  std::map<Item, Rational, std::greater<>> work;
  for (auto& [k, c] : rest) work.emplace(Item{column_word(d, k), k}, c);
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Rational c = node.mapped();
    if (c == 0) continue;
    const Tableau t = q.tableau(node.key().second);
    std::optional<Cell> descent;
    for (int col = 1; col < d.num_cols() && !descent; ++col)
      for (const Cell& cell : d.col_cells(col))
        if (d.contains({cell.row, col + 1}) && t.at(cell) > t.at({cell.row, col + 1})) {
          descent = cell;
          break;
        }
    if (!descent) {
      coords[t] += c;
      continue;
    }
    GarnirDatum g;
    g.columns = {descent->col, descent->col + 1};
    g.sets.emplace_back();
    for (const Cell& cell : d.col_cells(descent->col))
      if (cell.row >= descent->row) g.sets[0].push_back(cell);
    for (const Cell& cell : d.col_cells(descent->col + 1))
      if (cell.row <= descent->row) g.sets[0].push_back(cell);
    g.sets[0] = sorted_boxes(g.sets[0]);
    const QVec e = q.stab(t, g);
    auto self = e.find(node.key().second);
    if (self == e.end()) throw ConsistencyError("row-descent relation misses its own tableau");
    const Rational kappa = self->second;
    TraceStep s;
    s.kind = TraceStep::Kind::TwoColumnGarnir;
    s.lhs.push_back({c, t, std::nullopt});
    s.garnir.push_back({c / kappa, t, g});
    for (const auto& [k, v] : e) {
      if (k == node.key().second) continue;
      const Rational a = -c * v / kappa;
      Item item{column_word(d, k), k};
      if (!(item < node.key())) throw ConsistencyError("row-descent straightening did not move toward dominance");
      s.rhs.push_back({a, q.tableau(k), std::nullopt});
      auto [it, inserted] = work.try_emplace(std::move(item), a);
      if (!inserted) it->second += a;
    }
    trace.steps.push_back(std::move(s));
  }
}

void Straightener::place(const ColumnQuotient& q, const BoxSet& bs, std::size_t target, const Rational& coef,
                         const Tableau& u, const GarnirDatum& g, TraceStep& step, std::vector<QVec>& groups) {
  QVec e;
  q.add_stab(e, u, g, coef);
  for (const auto& [k, c] : e) {
    auto [t, sign] = with_top_label_at(q, k, bs[target]);
    step.rhs.push_back({sign > 0 ? c : Rational(-c), t, std::nullopt});
    add_to(groups[target], k, c);
  }
}

void Straightener::rewrite(const ColumnQuotient& q, const BoxSet& bs, std::size_t i, const Tableau& u,
                           const GarnirDatum& g, const Rational& coef, TraceStep& step, std::vector<QVec>& groups) {
  const Diagram& d = q.diagram();
  const Cell b = bs[i];
  const std::size_t m = g.sets.size();
  auto col_at = std::find(g.columns.begin(), g.columns.end(), b.col);
  if (col_at == g.columns.end()) throw ConsistencyError("lifted relation fails without touching the column of " + to_string(b));
  std::size_t pcol = static_cast<std::size_t>(col_at - g.columns.begin());

  auto absorb = [&](const MoveReplay& r) {
    for (const TraceStep& s : r.details) step.details.push_back(s);
    step.garnir.insert(step.garnir.end(), r.garnir.begin(), r.garnir.end());
  };
  auto lowest_in = [](const GarnirDatum& a, int col) {
    std::optional<Cell> y;
    for (const BoxSet& s : a.sets)
      for (const Cell& c : s)
        if (c.col == col && (!y || c.row < y->row)) y = c;
    return y;
  };

  // A later branching box shares a column with the relation: move into it.
  for (std::size_t later = i + 1; later < bs.size(); ++later) {
    const std::optional<Cell> y = lowest_in(g, bs[later].col);
    if (!y) continue;
    GarnirDatum grown = g;
    BoxSet& s = grown.sets[std::min(pcol, m - 1)];
    s.push_back(b);
    s = sorted_boxes(s);
    if (!validate_garnir(d, grown)) throw ConsistencyError("enlarged relation is not valid: " + to_string(grown));
    const MoveReplay r = replay(move_relation(d, grown, b, *y), u, coef, *y);
    absorb(r);
    if (step.kind == TraceStep::Kind::ColumnsGarnir) step.kind = TraceStep::Kind::Move;
    if (r.coef != 0) place(q, bs, later, r.coef, r.tableau, r.datum, step, groups);
    return;
  }

  // Otherwise extend by the column of a later branching box covering the common rows.
  std::uint64_t common = ~std::uint64_t{0};
  for (int col : g.columns) common &= d.col_mask(col);
  std::size_t later = bs.size();
  for (std::size_t k = i + 1; k < bs.size() && later == bs.size(); ++k)
    if ((common & ~d.col_mask(bs[k].col)) == 0) later = k;
  if (later == bs.size()) throw ConsistencyError("no later branching box covers the common rows of " + to_string(g));

  GarnirDatum oriented = g;
  if (pcol == 0) {
    oriented = reversed(g);
    pcol = m;
  }
  MoveReplay r;
  Cell y = b;
  if (pcol == m) {
    r.coef = coef;
    r.tableau = u;
    r.datum = oriented;
  } else {
    y = *lowest_in(oriented, oriented.columns.back());
    GarnirDatum grown = oriented;
    grown.sets[pcol].push_back(b);
    grown.sets[pcol] = sorted_boxes(grown.sets[pcol]);
    if (!validate_garnir(d, grown)) throw ConsistencyError("enlarged relation is not valid: " + to_string(grown));
    r = replay(move_relation(d, grown, b, y), u, coef, y);
    absorb(r);
  }
  step.kind = TraceStep::Kind::ExtendedGarnir;
  if (r.coef == 0) return;

  const Cell target = bs[later];
  GarnirDatum extended = r.datum;
  extended.columns.push_back(target.col);
  extended.sets.push_back(d.col_cells(target.col));
  const Rational scale = r.coef / factorial_q(extended.sets.back().size());
  TraceStep widen;
  widen.kind = TraceStep::Kind::ExtendedGarnir;
  widen.lhs.push_back({r.coef, r.tableau, r.datum});
  widen.rhs.push_back({scale, r.tableau, extended});
  step.details.push_back(std::move(widen));
  extended.sets.back().push_back(y);
  extended.sets.back() = sorted_boxes(extended.sets.back());
  if (!validate_garnir(d, extended)) throw ConsistencyError("extended relation is not valid: " + to_string(extended));
  const MoveReplay last = replay(move_relation(d, extended, y, target), r.tableau, scale, target);
  absorb(last);
  if (last.coef != 0) place(q, bs, later, last.coef, last.tableau, last.datum, step, groups);
}

std::shared_ptr<StraighteningTrace> Straightener::solve(const Diagram& d, const QVec& x) {
  auto trace = std::make_shared<StraighteningTrace>();
  trace->diagram = d;
  trace->choice = choice_.name;
  trace->method = "branching";
  const ColumnQuotient q(d);
  for (const auto& [k, c] : x) trace->input.push_back({c, q.tableau(k), std::nullopt});
  if (d.empty()) {
    auto it = x.find(Key{});
    if (it != x.end()) trace->coordinates.emplace_back(Tableau(Diagram(), {}), it->second);
    return trace;
  }
  const Level& lv = level(d);
  trace->branching = lv.branching;
  std::map<Tableau, Rational> coords;
  QVec rest;
  for (const auto& [k, c] : x) {
    auto it = lv.chain_keys.find(k);
    if (it == lv.chain_keys.end())
      rest.emplace(k, c);
    else
      coords[it->second.first] += it->second.second > 0 ? c : Rational(-c);
  }

  if (choice_.classical_young && d.is_young()) {
    trace->method = "classical";
    classical(q, std::move(rest), *trace, coords);
  } else {
    const BoxSet& bs = lv.branching;
    const int n = static_cast<int>(d.size());
    std::vector<QVec> groups(bs.size());
    for (const auto& [k, c] : rest) {
      const Tableau t = q.tableau(k);
      const Cell at = t.cell_of(n);
      std::size_t i = 0;
      while (i < bs.size() && bs[i].col != at.col) ++i;
      if (i < bs.size()) {
        add_to(groups[i], k, c);
        if (at != bs[i]) {
          TraceStep s;
          s.kind = TraceStep::Kind::OneColumn;
          s.lhs.push_back({c, t, std::nullopt});
          s.rhs.push_back({-c, t.swapped(at, bs[i]), std::nullopt});
          trace->steps.push_back(std::move(s));
        }
        continue;
      }
      i = 0;
      while (i < bs.size() && (d.col_mask(at.col) & ~d.col_mask(bs[i].col)) != 0) ++i;
      if (i == bs.size()) throw ConsistencyError("no branching column contains the column of " + to_string(at));
      GarnirDatum g;
      g.columns = {at.col, bs[i].col};
      g.sets.push_back(d.col_cells(bs[i].col));
      g.sets[0].push_back(at);
      g.sets[0] = sorted_boxes(g.sets[0]);
      TraceStep s;
      s.kind = TraceStep::Kind::TwoColumnGarnir;
      s.lhs.push_back({c, t, std::nullopt});
      const Rational scale = c / factorial_q(d.col_length(bs[i].col));
      const MoveReplay r = replay(move_relation(d, g, at, bs[i]), t, scale, bs[i]);
      s.details = r.details;
      s.garnir = r.garnir;
      if (r.coef != 0) place(q, bs, i, r.coef, r.tableau, r.datum, s, groups);
      trace->steps.push_back(std::move(s));
    }

    for (std::size_t i = 0; i < bs.size(); ++i) {
      if (groups[i].empty()) continue;
      const Cell b = bs[i];
      const Diagram smaller = d.without(b);
      const ColumnQuotient sq(smaller);
      TraceStep s;
      s.kind = TraceStep::Kind::ColumnsGarnir;
      s.placement = static_cast<int>(i) + 1;
      QVec stripped;
      for (const auto& [k, c] : groups[i]) {
        auto [t, sign] = with_top_label_at(q, k, b);
        const Rational a = sign > 0 ? c : Rational(-c);
        s.lhs.push_back({a, t, std::nullopt});
        sq.add(stripped, strip(t, smaller, b).labels(), a);
      }
      auto child = solve(smaller, stripped);
      for (const auto& [tc, c] : child->coordinates) {
        const Tableau lifted = lift(tc, d, b);
        s.rhs.push_back({c, lifted, std::nullopt});
        coords[lifted] += c;
      }
      std::vector<TraceTerm> below;
      collect_garnir(*child, below);
      for (const TraceTerm& term : below) {
        const Tableau u = lift(term.tableau, d, b);
        if (validate_garnir(d, *term.stab))
          s.garnir.push_back({term.coef, u, term.stab});
        else
          rewrite(q, bs, i, u, *term.stab, term.coef, s, groups);
      }
      s.child = std::move(child);
      trace->steps.push_back(std::move(s));
    }
  }
  for (auto& [t, c] : coords)
    if (c != 0) trace->coordinates.emplace_back(t, c);
  return trace;
}

// ---------------------------------------------------------------------------

bool check_step(const ColumnQuotient& q, const StraighteningTrace& trace, const TraceStep& s, std::string& reason) {
  const Diagram& d = q.diagram();
  try {
    for (const auto* list : {&s.lhs, &s.rhs})
      for (const TraceTerm& t : *list) {
        if (!(t.tableau.shape() == d)) {
          reason = "term tableau has the wrong shape";
          return false;
        }
        if (t.stab) check_garnir_structure(d, *t.stab);
      }
    for (const TraceTerm& t : s.garnir)
      if (!t.stab || !(t.tableau.shape() == d) || !validate_garnir(d, *t.stab)) {
        reason = "Garnir term is not a valid relation";
        return false;
      }
  } catch (const DomainError& e) {
    reason = e.what();
    return false;
  }
  QVec v = expand_terms(q, s.lhs);
  axpy(v, -1, expand_terms(q, s.rhs));
  axpy(v, -1, expand_terms(q, s.garnir));
  if (!is_zero(v)) {
    reason = "step identity fails in the column quotient";
    return false;
  }
  for (const TraceStep& x : s.details)
    if (!check_step(q, trace, x, reason)) {
      reason = "detail: " + reason;
      return false;
    }
  if (trace.method != "branching") return true;
  const int n = static_cast<int>(d.size());
  auto slot = [&](const Tableau& t) {
    const Cell at = t.cell_of(n);
    for (std::size_t i = 0; i < trace.branching.size(); ++i)
      if (trace.branching[i] == at) return static_cast<int>(i) + 1;
    return 0;
  };
  if (s.placement > 0) {
    for (const TraceTerm& t : s.lhs)
      if (slot(t.tableau) != s.placement) {
        reason = "left side does not hold the largest label in the placement box";
        return false;
      }
    for (const TraceTerm& t : s.rhs) {
      const int p = slot(t.tableau);
      bool final_term = false;
      if (p == s.placement && s.child) {
        const Cell b = trace.branching[p - 1];
        const Tableau below = strip(t.tableau, s.child->diagram, b);
        final_term = std::any_of(s.child->coordinates.begin(), s.child->coordinates.end(),
                                 [&](const auto& c) { return c.first == below; });
      }
      if (t.stab || !(p > s.placement || (p == s.placement && final_term))) {
        reason = "largest label does not advance";
        return false;
      }
    }
  } else if (s.kind == TraceStep::Kind::OneColumn || s.kind == TraceStep::Kind::TwoColumnGarnir) {
    for (const TraceTerm& t : s.rhs)
      if (t.stab || slot(t.tableau) == 0) {
        reason = "largest label not moved into a branching box";
        return false;
      }
  }
  return true;
}

TraceCheck check_trace(const StraighteningTrace& trace) {
  TraceCheck out;
  const Diagram& d = trace.diagram;
  const ColumnQuotient q(d);
  int last_placement = 0;
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const TraceStep& s = trace.steps[k];
    auto fail = [&](std::string why) {
      out.ok = false;
      out.failing_step.insert(out.failing_step.begin(), static_cast<int>(k));
      out.reason = std::move(why);
      return out;
    };
    std::string reason;
    if (!check_step(q, trace, s, reason)) return fail(reason);
    if (s.placement > 0) {
      if (s.placement <= last_placement) return fail("placements do not strictly increase");
      last_placement = s.placement;
      if (static_cast<std::size_t>(s.placement) > trace.branching.size()) return fail("placement out of range");
      if (!s.child) return fail("placement step without a child trace");
      const Cell b = trace.branching[s.placement - 1];
      if (!(s.child->diagram == d.without(b))) return fail("child trace has the wrong diagram");
      TraceCheck sub = check_trace(*s.child);
      if (!sub.ok) {
        out = sub;
        out.failing_step.insert(out.failing_step.begin(), static_cast<int>(k));
        return out;
      }
      // The child's input is the stripped left side.
      const ColumnQuotient sq(s.child->diagram);
      QVec lhs;
      for (const TraceTerm& t : s.lhs) sq.add(lhs, strip(t.tableau, s.child->diagram, b).labels(), t.coef);
      axpy(lhs, -1, expand_terms(sq, s.child->input));
      if (!is_zero(lhs)) return fail("child input differs from the stripped left side");
    } else if (s.child) {
      return fail("child trace outside a placement step");
    }
  }
  QVec v = expand_terms(q, trace.input);
  for (const auto& [t, c] : trace.coordinates) {
    if (!(t.shape() == d)) {
      out.ok = false;
      out.reason = "coordinate tableau has the wrong shape";
      return out;
    }
    q.add(v, t.labels(), -c);
  }
  for (const TraceStep& s : trace.steps) axpy(v, -1, expand_terms(q, s.garnir));
  if (!is_zero(v)) {
    out.ok = false;
    out.reason = "telescoped identity fails";
  }
  return out;
}

}  // namespace

ChoiceFunction lex_choice(Classifier& classifier) {
  return memoized("lex", [&classifier](const Diagram& d) { return classifier.first_branching_set(d); }, false);
}

ChoiceFunction young_corner_choice(Classifier& classifier) {
  return memoized(
      "young",
      [&classifier](const Diagram& d) { return d.is_young() ? corner_set(d) : classifier.first_branching_set(d); },
      true);
}

ChoiceFunction with_top_choice(ChoiceFunction base, const Diagram& top, const BoxSet& b) {
  ChoiceFunction f;
  f.name = base.name + "+top";
  f.classical_young = base.classical_young;
  f.select = [base = std::move(base), top, b = sorted_boxes(b)](const Diagram& d) {
    return d == top ? b : base.select(d);
  };
  return f;
}

BoxSet ordered_branching_set(const Diagram& d, const ChoiceFunction& choice, Classifier& classifier) {
  if (d.empty()) return {};
  if (!classifier.is_completely_branching(d)) throw DomainError("diagram does not branch completely");
  const BoxSet b = choice.select(d);
  if (b.empty()) throw DomainError("choice function returned no branching set");
  const TransversalResult st = is_special_transversal(d, b);
  if (!st.accepted) throw DomainError("chosen set is not a special transversal: " + st.reason);
  if (!is_exact_hitting_set(d, b)) throw DomainError("chosen set misses a maximal rectangle or hits one twice");
  if (!classifier.branches_completely_wrt(d, b)) throw DomainError("a removal along the chosen set does not branch completely");
  return st.order;
}

std::vector<ChainTableau> chain_basis(const Diagram& d, const ChoiceFunction& choice, Classifier& classifier) {
  std::map<std::vector<Cell>, std::vector<std::vector<Cell>>> memo;
  std::function<const std::vector<std::vector<Cell>>&(const Diagram&)> chains =
      [&](const Diagram& x) -> const std::vector<std::vector<Cell>>& {
    auto it = memo.find(x.cells());
    if (it != memo.end()) return it->second;
    std::vector<std::vector<Cell>> out;
    if (x.empty()) {
      out.emplace_back();
    } else {
      for (const Cell& b : ordered_branching_set(x, choice, classifier))
        for (std::vector<Cell> c : chains(x.without(b))) {
          c.push_back(b);
          out.push_back(std::move(c));
        }
    }
    return memo.emplace(x.cells(), std::move(out)).first->second;
  };
  std::vector<ChainTableau> out;
  for (const std::vector<Cell>& boxes : chains(d)) {
    std::vector<std::pair<Cell, int>> entries;
    for (std::size_t j = 0; j < boxes.size(); ++j) entries.emplace_back(boxes[j], static_cast<int>(j) + 1);
    out.push_back({Tableau::from_cells(d, entries), boxes, choice.name});
  }
  std::sort(out.begin(), out.end(), [](const ChainTableau& a, const ChainTableau& b) { return a.tableau < b.tableau; });
  return out;
}

std::vector<ChainTableau> chain_basis(const Diagram& d) { return chain_basis(d, lex_choice()); }

std::string to_string(TraceStep::Kind k) {
  switch (k) {
    case TraceStep::Kind::OneColumn: return "one_column";
    case TraceStep::Kind::TwoColumnGarnir: return "two_column_garnir";
    case TraceStep::Kind::ColumnsGarnir: return "columns_garnir";
    case TraceStep::Kind::ExtendedGarnir: return "extended_garnir";
    case TraceStep::Kind::Move: return "move";
  }
  return "?";
}

ColumnQuotient::Vector expand_terms(const ColumnQuotient& q, const std::vector<TraceTerm>& terms) {
  QVec v;
  for (const TraceTerm& t : terms) {
    if (t.stab)
      q.add_stab(v, t.tableau, *t.stab, t.coef);
    else
      q.add(v, t.tableau.labels(), t.coef);
  }
  return v;
}

StraightenResult straighten(const std::vector<std::pair<Tableau, Rational>>& x, const ChoiceFunction& choice,
                            Classifier& classifier) {
  if (x.empty()) throw DomainError("nothing to straighten");
  const Diagram& d = x.front().first.shape();
  for (const auto& [t, c] : x)
    if (!(t.shape() == d)) throw DomainError("tableaux of different shapes");
  if (!classifier.is_completely_branching(d)) throw DomainError("diagram does not branch completely");
  const ColumnQuotient q(d);
  QVec v;
  for (const auto& [t, c] : x) q.add(v, t.labels(), c);
  Straightener s(choice, classifier);
  auto trace = s.solve(d, v);
  trace->input.clear();
  for (const auto& [t, c] : x) trace->input.push_back({c, t, std::nullopt});
  StraightenResult out;
  for (const auto& [t, c] : trace->coordinates) out.coordinates[t] = c;
  out.trace = std::move(trace);
  return out;
}

StraightenResult straighten(const Tableau& t, const ChoiceFunction& choice, Classifier& classifier) {
  return straighten({{t, Rational(1)}}, choice, classifier);
}

StraightenResult straighten(const Tableau& t) { return straighten(t, lex_choice()); }

TraceCheck verify_trace(const StraighteningTrace& trace) {
  TraceCheck out;
  try {
    out = check_trace(trace);
  } catch (const std::exception& e) {
    out.ok = false;
    out.reason = e.what();
    return out;
  }
  if (!out.ok) return out;
  // Independent evaluation inside the group algebra for small diagrams.
  const Diagram& d = trace.diagram;
  if (d.empty() || static_cast<int>(d.size()) > oracle_bound()) return out;
  const DenseVector sym = young_symmetrizer_dense(d);
  std::map<std::size_t, Rational> acc;
  auto add = [&](const Tableau& t, const Rational& c) {
    const DenseVector e = specht_vector_dense(t, sym);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0) {
        Rational& slot = acc[k];
        slot += c * Rational(static_cast<long long>(e[k]));
      }
  };
  for (const TraceTerm& t : trace.input) add(t.tableau, t.coef);
  for (const auto& [t, c] : trace.coordinates) add(t, -c);
  for (const auto& [k, c] : acc)
    if (c != 0) {
      out.ok = false;
      out.reason = "coordinates disagree with the group-algebra evaluation";
      return out;
    }
  return out;
}

}  // namespace specht
