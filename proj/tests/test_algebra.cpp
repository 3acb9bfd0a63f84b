#include <doctest.h>

#include <random>

#include "specht/morphism.hpp"
#include "specht/partition.hpp"
#include "specht/young_rep.hpp"
#include "support.hpp"

using namespace specht;
using namespace specht::testing;

namespace {

Permutation s(int n, int i) { return Permutation::transposition(n, i, i + 1); }

Permutation power(const Permutation& p, int k) {
  Permutation r(p.size());
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

Tableau tab(const Diagram& d, const std::string& text) { return io::parse_tableau(d, text); }

}  // namespace

TEST_CASE("coxeter relations") {
  const int n = 6;
  for (int i = 1; i < n; ++i) {
    CHECK(power(s(n, i), 2).is_identity());
    if (i + 1 < n) CHECK(power(s(n, i) * s(n, i + 1), 3).is_identity());
    for (int j = i + 2; j < n; ++j) CHECK(s(n, i) * s(n, j) == s(n, j) * s(n, i));
  }
  for (std::uint64_t r = 0; r < factorial(5); ++r) {
    const Permutation p = Permutation::unrank(5, r);
    CHECK(p.rank() == r);
    CHECK((p * p.inverse()).is_identity());
  }
  CHECK(Permutation(std::vector<int>{2, 3, 1}).sign() == 1);
  CHECK(s(4, 2).sign() == -1);
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1}), DomainError);
}

TEST_CASE("partitions and characters") {
  CHECK(hook_length_dimension({3, 2, 1}) == 16);
  CHECK(hook_length_dimension({5, 1, 1, 1, 1}) == 70);
  CHECK(parse_partition("5,1^4") == Partition{5, 1, 1, 1, 1});
  CHECK(parse_partition("(3,2,1)") == Partition{3, 2, 1});
  CHECK(parse_partition("321") == Partition{3, 2, 1});
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t sum = 0;
    for (const Partition& p : partitions_of(n)) {
      CHECK(standard_tableaux(p).size() == hook_length_dimension(p));
      CHECK(irreducible_character(p, Partition(n, 1)) == static_cast<std::int64_t>(hook_length_dimension(p)));
      sum += hook_length_dimension(p) * hook_length_dimension(p);
    }
    CHECK(sum == factorial(n));
    // Column orthogonality: sum of squares over irreducibles is the centralizer order.
    for (const ConjugacyClass& c : conjugacy_classes(n)) {
      std::int64_t sq = 0;
      for (const Partition& p : partitions_of(n)) sq += irreducible_character(p, c.cycle_type) * irreducible_character(p, c.cycle_type);
      CHECK(static_cast<std::uint64_t>(sq) * c.size == factorial(n));
      CHECK(c.representative.cycle_type() == c.cycle_type);
    }
  }
  CHECK(restrict_multiplicities({{{3, 2, 1}, 1}}) == MultiplicityVector{{{2, 2, 1}, 1}, {{3, 1, 1}, 1}, {{3, 2}, 1}});
}

TEST_CASE("natural representation") {
  const YoungNaturalRep& rho = young_natural_rep({3, 2, 1});
  CHECK(rho.dimension() == 16);
  using M = linalg::Matrix<std::int64_t>;
  const M id = M::Identity(16, 16);
  for (int i = 1; i < 6; ++i) {
    const M a = rho.adjacent_matrix(i);
    CHECK(a * a == id);
    if (i < 5) {
      const M b = rho.adjacent_matrix(i + 1);
      CHECK((a * b) * (a * b) * (a * b) == id);
    }
  }
  CHECK(kostka_number({3, 2, 1}, {2, 2, 2}) == 2);
  CHECK(kostka_number({2, 2}, {1, 1, 1, 1}) == 2);
  CHECK(kostka_number({2, 2}, {3, 1}) == 0);
}

TEST_CASE("one-column rule") {
  std::mt19937 rng(3);
  for (const char* name : {"straightening.txt", "hexagon.txt", "two_branching_sets.txt", "garnir_222.txt"}) {
    const Diagram d = fixture_diagram(name);
    const DenseVector sym = young_symmetrizer_dense(d);
    for (int k = 0; k < 5; ++k) {
      const Tableau t = random_tableau(d, rng);
      for (int c : d.occupied_cols()) {
        const auto cells = d.col_cells(c);
        if (cells.size() < 2) continue;
        const Tableau u = t.swapped(cells.front(), cells.back());
        DenseVector sum = specht_vector_dense(t, sym);
        const DenseVector other = specht_vector_dense(u, sym);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += other[i];
        CHECK(all_zero(sum));
      }
    }
  }
}

TEST_CASE("dense and sparse Specht vectors agree") {
  const Diagram d = fixture_diagram("straightening.txt");
  const Tableau t = tab(d, "214/3/.5");
  CHECK(to_dense(specht_vector(t)) == specht_vector_dense(t, young_symmetrizer_dense(d)));
}

TEST_CASE("two-column relation on (2,2,2)") {
  const Diagram d = fixture_diagram("garnir_222.txt");
  const GarnirDatum g = io::parse_datum(fixture_text("garnir_222_datum.json"));
  const Tableau t1 = io::parse_tableau(d, fixture_text("garnir_222_tableau.txt"));
  CHECK(validate_garnir(d, g));
  CHECK(is_minimal(d, g));
  const DenseVector sym = young_symmetrizer_dense(d);
  // e_T1 - e_T2 + e_T3 + e_T4 - e_T5 + e_T6 = 0
  const std::vector<std::pair<std::string, int>> terms{{"14/25/36", 1}, {"13/25/46", -1}, {"13/24/56", 1},
                                                       {"12/35/46", 1}, {"12/34/56", -1}, {"12/43/56", 1}};
  DenseVector sum(sym.size(), 0);
  for (const auto& [text, sign] : terms) {
    const DenseVector v = specht_vector_dense(tab(d, text), sym);
    for (std::size_t i = 0; i < v.size(); ++i) sum[i] += sign * v[i];
  }
  CHECK(all_zero(sum));
  AlgebraElement coset(6);
  for (const auto& [text, sign] : terms) coset += specht_vector(tab(d, text)) * Rational(sign);
  CHECK(coset_garnir_element(t1, g) == coset);
  CHECK(garnir_element(t1, g).is_zero());
}

TEST_CASE("Garnir inequality") {
  const Diagram d = Diagram::from_partition({2, 2});
  GarnirDatum g{{1, 2}, {{{1, 1}, {2, 1}, {1, 2}}}};
  CHECK(garnir_bound(d, g) == 2);
  CHECK(validate_garnir(d, g));
  g.sets[0].pop_back();
  CHECK_FALSE(validate_garnir(d, g));
  CHECK_THROWS_AS(validate_garnir(d, GarnirDatum{{1, 1}, {{{1, 1}}}}), DomainError);
  CHECK_THROWS_AS(validate_garnir(d, GarnirDatum{{1, 2}, {{{3, 3}}}}), DomainError);
  CHECK_THROWS_AS(garnir_element(Tableau::reference(d), g), DomainError);
}

TEST_CASE("four-column relation is valid; one box fewer is not") {
  // Boxes labelled 1, 2, 3 in the worked four-column example.
  const Diagram d({{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {4, 2}, {5, 3}, {6, 4}});
  GarnirDatum g{{1, 2, 3, 4}, {{{1, 1}, {2, 1}, {3, 1}, {4, 2}}, {{1, 2}, {2, 2}, {5, 3}}, {{1, 3}, {2, 3}, {2, 4}, {6, 4}}}};
  CHECK(validate_garnir(d, g));
  g.sets[1].pop_back();
  CHECK_FALSE(validate_garnir(d, g));
}

TEST_CASE("move relation reproduces the worked rearrangement") {
  const Diagram d = fixture_diagram("move_relation.txt");
  const GarnirDatum g = io::parse_datum(fixture_text("move_relation_datum.json"));
  REQUIRE(validate_garnir(d, g));
  const Cell x{1, 1}, y{1, 3};
  const MoveResult m = move_relation(d, g, x, y);
  CHECK(m.pi(d.index_of(y) + 1) == d.index_of(x) + 1);
  CHECK(m.scalar == Rational(1, 2));
  const PermutationSpace& space = permutation_space(static_cast<int>(d.size()));
  const DenseVector sym = young_symmetrizer_dense(d);
  const DenseVector lhs = left_apply(space, stab_signed_sum(d, without_box(g, x)), sym);
  const DenseVector rhs = left_multiply(space, m.pi, left_apply(space, stab_signed_sum(d, without_box(m.datum, y)), sym));
  for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(Rational(lhs[i]) == m.scalar * Rational(rhs[i]));
}

TEST_CASE("move relation identity holds on random data") {
  std::mt19937 rng(17);
  int checked = 0;
  for (const char* name : {"move_relation.txt", "straightening.txt", "two_branching_sets.txt", "young_321.txt"}) {
    const Diagram d = fixture_diagram(name);
    const PermutationSpace& space = permutation_space(static_cast<int>(d.size()));
    const DenseVector sym = young_symmetrizer_dense(d);
    for (int k = 0; k < 400; ++k) {
      const auto g = random_datum(d, 1 + static_cast<int>(rng() % 2), rng);
      if (!g || !validate_garnir(d, *g)) continue;
      std::vector<Cell> boxes;
      for (const BoxSet& s : g->sets) boxes.insert(boxes.end(), s.begin(), s.end());
      const Cell x = boxes[rng() % boxes.size()];
      const Cell y = boxes[rng() % boxes.size()];
      if (g->set_of(x) > g->set_of(y)) continue;
      const MoveResult m = move_relation(d, *g, x, y);
      const DenseVector lhs = left_apply(space, stab_signed_sum(d, without_box(*g, x)), sym);
      if (m.scalar == 0) {
        CHECK(all_zero(lhs));
      } else {
        CHECK(m.pi(d.index_of(y) + 1) == d.index_of(x) + 1);
        const DenseVector rhs =
            left_multiply(space, m.pi, left_apply(space, stab_signed_sum(d, without_box(m.datum, y)), sym));
        for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(Rational(lhs[i]) == m.scalar * Rational(rhs[i]));
      }
      ++checked;
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("smash embedding") {
  const Diagram d = fixture_diagram("smash.txt");
  const CellMap psi = smash_embedding(d, 4);
  CHECK(psi.target == fixture_diagram("smash_image.txt"));
  CHECK(smash_embedding(psi.target, 4).is_identity());
  CHECK(smash_embedding(d, 1).target == smash_embedding(d, 1).source);
}

TEST_CASE("smash images embed") {
  // e_T psi over a spanning set of S^E lands in S^D with rank dim S^E.
  std::mt19937 rng(31);
  int checked = 0;
  while (checked < 12) {
    std::vector<Cell> cells;
    for (int r = 1; r <= 3; ++r)
      for (int c = 1; c <= 4; ++c)
        if (rng() % 5 < 2) cells.push_back({r, c});
    if (cells.size() < 3 || cells.size() > 7) continue;
    const Diagram d(cells);
    const CellMap psi = smash_embedding(d, 2 + static_cast<int>(rng() % 2));
    if (psi.is_identity()) continue;
    const int n = static_cast<int>(d.size());
    const SpechtBasis sd = specht_basis(d);
    const SpechtBasis se = specht_basis(psi.target);
    const PermutationSpace& space = permutation_space(n);
    const Permutation p = psi.as_permutation();
    linalg::ModEchelon ambient(space.size());
    for (const auto& row : sd.rows) ambient.insert(row);
    linalg::ModEchelon image(space.size());
    bool inside = true;
    for (const DenseVector& v : spanning_vectors(psi.target)) {
      const auto w = linalg::to_mod(right_multiply(space, v, p));
      inside = inside && ambient.contains(w);
      image.insert(w);
    }
    CHECK(inside);
    CHECK(image.rank() == se.dimension);
    ++checked;
  }
}

TEST_CASE("row merge") {
  const Diagram d = fixture_diagram("hexagon.txt");
  std::vector<int> own_row;
  for (const Cell& c : d.cells()) own_row.push_back(c.row);
  const CellMap m = merge_rows_surjection(d, own_row);
  CHECK(m.target == d);
  CHECK(m.is_identity());
  CHECK_THROWS_AS(merge_rows_surjection(Diagram({{1, 1}, {2, 1}}), {1, 1}), DomainError);

  // Rows 2 and 3 of the straightening diagram merged: E is the Young diagram (3,2).
  const Diagram s = fixture_diagram("straightening.txt");
  const CellMap merged = merge_rows_surjection(s, {1, 1, 1, 2, 2});
  CHECK(merged.target == Diagram::from_partition({3, 2}));
  const DenseVector sym = young_symmetrizer_dense(merged.target);
  const SpechtBasis target = specht_basis(merged.target);
  const PermutationSpace& space = permutation_space(5);
  const Permutation inv = merged.as_permutation().inverse();
  linalg::ModEchelon ambient(space.size());
  for (const auto& row : target.rows) ambient.insert(row);
  linalg::ModEchelon image(space.size());
  bool inside = true;
  // e_T maps to e_{T psi^-1}; the images span S^E.
  for (std::uint64_t r = 0; r < factorial(5); ++r) {
    const Tableau t = Tableau::from_permutation(s, Permutation::unrank(5, r));
    const Tableau u = Tableau::from_permutation(merged.target, t.as_permutation() * inv);
    const auto w = linalg::to_mod(specht_vector_dense(u, sym));
    inside = inside && ambient.contains(w);
    image.insert(w);
  }
  CHECK(inside);
  CHECK(image.rank() == target.dimension);
}
