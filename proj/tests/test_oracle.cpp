#include <doctest.h>

#include "specht/classifier.hpp"
#include "specht/sweep.hpp"
#include "specht/young_rep.hpp"
#include "support.hpp"

using namespace specht;
using namespace specht::testing;

TEST_CASE("Young diagrams give one irreducible") {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& p : partitions_of(n)) {
      const Diagram d = Diagram::from_partition(p);
      CHECK(decompose(d) == MultiplicityVector{{p, 1}});
      CHECK(decompose_targeted(d) == MultiplicityVector{{p, 1}});
      CHECK(specht_basis(d).dimension == hook_length_dimension(p));
    }
}

TEST_CASE("two decomposition routes agree") {
  for (const Diagram& d : enumerate_classes(5, 3, 3)) CHECK(decompose(d) == decompose_targeted(d));
  CHECK(decompose(fixture_diagram("two_branching_sets.txt")) == decompose_targeted(fixture_diagram("two_branching_sets.txt")));
}

TEST_CASE("characters and closure") {
  const SpechtBasis b = specht_basis(fixture_diagram("hexagon.txt"));
  CHECK(closed_under_generators(b));
  CHECK(character_value(b, Permutation(6)) == static_cast<std::int64_t>(b.dimension));
  // chi((12)) from the decomposition (3,3) + 2(3,2,1) + (2,2,2).
  const Permutation t = Permutation::transposition(6, 1, 2);
  CHECK(character_value(b, t) == irreducible_character({3, 3}, {2, 1, 1, 1, 1}) +
                                     2 * irreducible_character({3, 2, 1}, {2, 1, 1, 1, 1}) +
                                     irreducible_character({2, 2, 2}, {2, 1, 1, 1, 1}));
}

TEST_CASE("branching checks") {
  const Diagram y = Diagram::from_partition({3, 2, 1});
  CHECK(verify_branching(y, fixture_boxes("young_321_corners.json")));
  CHECK_FALSE(verify_branching(y, {{3, 1}}));
  CHECK(restriction_decompose(y) == branch_sum(y, fixture_boxes("young_321_corners.json")));
  const Diagram d = fixture_diagram("two_branching_sets.txt");
  CHECK(verify_branching(d, fixture_boxes("two_branching_sets_b1.json")));
  CHECK(verify_branching(d, fixture_boxes("two_branching_sets_b2.json")));
}

TEST_CASE("filtration along a branching set") {
  const Diagram d = fixture_diagram("straightening.txt");
  const FiltrationReport r = verify_filtration(d, fixture_boxes("straightening_boxes.json"));
  CHECK(r.all_hold);
  CHECK(r.spans);
  CHECK(r.module_dim == 11);
  std::size_t sum = 0;
  for (std::size_t x : r.child_dims) sum += x;
  CHECK(sum == r.module_dim);
  CHECK_THROWS_AS(verify_filtration(d, {{1, 1}, {1, 2}}), DomainError);
}

TEST_CASE("capacity bound") {
  std::vector<Cell> row;
  for (int c = 1; c <= 9; ++c) row.push_back({1, c});
  CHECK_THROWS_AS(specht_basis(Diagram(row)), CapacityError);
}

TEST_CASE("targeted multiplicity sums over the partitions above") {
  const Diagram d = fixture_diagram("hexagon.txt");
  const MultiplicityVector res = restriction_decompose(d);
  for (const Partition& l : partitions_of(5)) {
    auto it = res.find(l);
    CHECK(restriction_multiplicity_targeted(d, l) == (it == res.end() ? 0 : it->second));
  }
}

TEST_CASE("oracle side of complete branching") {
  CHECK(oracle_completely_branching(Diagram::from_partition({3, 2, 1})));
  CHECK_FALSE(oracle_completely_branching(fixture_diagram("hexagon.txt")));
  CHECK(oracle_completely_branching(fixture_diagram("two_branching_sets.txt")));
}

TEST_CASE("sweep basics") {
  CHECK(enumerate_classes(0, 3, 3).size() == 1);
  SweepOptions o;
  o.max_boxes = 4;
  o.oracle = true;
  const SweepReport r = run_sweep(o);
  CHECK(r.not_completely_branching == 0);
  CHECK(r.clean());
  CHECK(r.completely_branching + r.not_completely_branching == r.classes);
  o.max_boxes = 6;
  const SweepReport six = run_sweep(o);
  REQUIRE(six.nonbranching_classes.size() == 1);
  CHECK(equivalent(six.nonbranching_classes[0], fixture_diagram("hexagon.txt")));
  CHECK(six.clean());
  CHECK_THROWS_AS(enumerate_classes(30, 8, 8), CapacityError);
}
