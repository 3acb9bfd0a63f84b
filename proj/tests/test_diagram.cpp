#include <doctest.h>

#include <random>
#include <set>

#include "support.hpp"

using namespace specht;
using namespace specht::testing;

namespace {

// Brute force: every (row set, column set) product inside d, kept when no
// single added row or column still fits.
std::vector<Rectangle> brute_rectangles(const Diagram& d) {
  const std::vector<int> rows = d.occupied_rows();
  const std::vector<int> cols = d.occupied_cols();
  auto fits = [&](std::uint64_t rm, std::uint64_t cm) {
    for (int r : rows)
      if ((rm >> (r - 1)) & 1U)
        if ((d.row_mask(r) & cm) != cm) return false;
    return true;
  };
  std::vector<Rectangle> out;
  for (std::uint64_t rs = 1; rs < (1ULL << rows.size()); ++rs)
    for (std::uint64_t cs = 1; cs < (1ULL << cols.size()); ++cs) {
      std::uint64_t rm = 0, cm = 0;
      for (std::size_t k = 0; k < rows.size(); ++k)
        if ((rs >> k) & 1U) rm |= 1ULL << (rows[k] - 1);
      for (std::size_t k = 0; k < cols.size(); ++k)
        if ((cs >> k) & 1U) cm |= 1ULL << (cols[k] - 1);
      if (!fits(rm, cm)) continue;
      bool maximal = true;
      for (int r : rows)
        if (!((rm >> (r - 1)) & 1U) && fits(rm | (1ULL << (r - 1)), cm)) maximal = false;
      for (int c : cols)
        if (!((cm >> (c - 1)) & 1U) && fits(rm, cm | (1ULL << (c - 1)))) maximal = false;
      if (maximal) out.push_back({rm, cm});
    }
  std::sort(out.begin(), out.end());
  return out;
}

Diagram scramble(const Diagram& d, std::mt19937& rng) {
  std::vector<int> rp(8), cp(8);
  std::iota(rp.begin(), rp.end(), 1);
  std::iota(cp.begin(), cp.end(), 1);
  std::shuffle(rp.begin(), rp.end(), rng);
  std::shuffle(cp.begin(), cp.end(), rng);
  std::vector<Cell> cells;
  for (const Cell& c : d.cells()) cells.push_back({rp[c.row - 1], cp[c.col - 1]});
  return Diagram(cells);
}

}  // namespace

TEST_CASE("ascii round trip") {
  for (const char* name : {"hexagon.txt", "branching_not_complete.txt", "chordal_not_branching.txt", "smash.txt"}) {
    const Diagram d = fixture_diagram(name);
    CHECK(parse_diagram(render_diagram(d)) == d);
  }
  const Diagram d = fixture_diagram("branching_not_complete.txt");
  CHECK(d.size() == 13);
  CHECK(d.row_length(2) == 0);
  CHECK(io::parse_diagram_any(io::to_json(d).dump()) == d);
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_diagram("##\n#x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 2);
  }
  CHECK_THROWS_AS(io::parse_diagram_any("{\"cells\": [[1,1], }"), ParseError);
  CHECK_THROWS_AS(Diagram({{1, 1}, {1, 1}}), DomainError);
  CHECK_THROWS_AS(Diagram({{0, 1}}), DomainError);
}

TEST_CASE("canonical form is invariant under row and column scrambles") {
  std::mt19937 rng(11);
  for (const char* name : {"hexagon.txt", "two_branching_sets.txt", "transversal_not_branching.txt", "smash.txt",
                           "northwest_forest.txt"}) {
    const Diagram d = fixture_diagram(name);
    const std::string key = canonical_key(d);
    for (int k = 0; k < 20; ++k) {
      const Diagram s = scramble(d, rng);
      CHECK(canonical_key(s) == key);
      CHECK(canonical_form(s).diagram == canonical_form(d).diagram);
      const CanonicalForm f = canonical_form(s);
      CHECK(permute_diagram(s, f.row_perm, f.col_perm) == f.diagram);
    }
  }
  CHECK_FALSE(equivalent(fixture_diagram("hexagon.txt"), Diagram::from_partition({3, 2, 1})));
}

TEST_CASE("maximal rectangles agree with brute force") {
  for (const Diagram& d : all_diagrams(6, 3, 3)) CHECK(maximal_rectangles(d) == brute_rectangles(d));
  std::mt19937 rng(5);
  for (int k = 0; k < 200; ++k) {
    std::vector<Cell> cells;
    for (int r = 1; r <= 5; ++r)
      for (int c = 1; c <= 5; ++c)
        if (rng() % 3 == 0) cells.push_back({r, c});
    const Diagram d(cells);
    CHECK(maximal_rectangles(d) == brute_rectangles(d));
  }
  // One rectangle per corner of a Young diagram.
  CHECK(maximal_rectangles(Diagram::from_partition({3, 2, 1})).size() == 3);
}

TEST_CASE("northwest and forest classes on the two-class example") {
  const Diagram d = fixture_diagram("northwest_forest.txt");
  const NorthwestCheck nw = is_northwest(d);
  CHECK(nw.northwest);
  CHECK(in_initial_segment_order(d));
  CHECK(is_forest(d));
  CHECK(northwest_branching_set(d) == fixture_boxes("northwest_forest_boxes.json"));
  const auto matchings = almost_perfect_matchings(d);
  CHECK(std::find(matchings.begin(), matchings.end(), fixture_boxes("northwest_forest_boxes.json")) !=
        matchings.end());
}

TEST_CASE("chordal test") {
  CHECK(is_gamma_freeable(Diagram::from_partition({3, 2, 1})));
  // A Young diagram has the forbidden corner; turned upside down it has none.
  CHECK_FALSE(is_gamma_free(Diagram::from_partition({3, 2, 1})));
  CHECK(is_gamma_free(parse_diagram("#..\n##.\n###\n")));
  // The hexagon's graph is a 6-cycle.
  CHECK_FALSE(is_gamma_freeable(fixture_diagram("hexagon.txt")));
  const Diagram chordal = fixture_diagram("chordal_not_branching.txt");
  CHECK(is_gamma_freeable(chordal));
  const BipartiteView g = bipartite_view(chordal);
  CHECK(g.row_vertices.size() + g.col_vertices.size() == 12);
  CHECK(g.edges.size() == 16);
}

TEST_CASE("induced subdiagrams reindex") {
  const Diagram d = fixture_diagram("branching_not_complete.txt");
  const std::vector<int> rows{3, 4, 5}, cols{1, 3, 4};
  const Diagram s = induced_subdiagram(d, rows, cols);
  CHECK(s == parse_diagram("#.#\n###\n##.\n"));
}
