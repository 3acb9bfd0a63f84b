#include <doctest.h>

#include <thread>

#include "specht/classifier.hpp"
#include "support.hpp"

using namespace specht;
using namespace specht::testing;

TEST_CASE("special transversal ordering") {
  const Diagram y = Diagram::from_partition({3, 2, 1});
  const TransversalResult r = is_special_transversal(y, fixture_boxes("young_321_corners.json"));
  REQUIRE(r.accepted);
  // Corners of a Young diagram come out bottom-left first.
  CHECK(r.order == std::vector<Cell>{{3, 1}, {2, 2}, {1, 3}});
  CHECK_FALSE(is_special_transversal(y, {{1, 1}, {1, 2}}).accepted);
  CHECK_THROWS_AS(is_special_transversal(y, {{4, 4}}), DomainError);
  CHECK(is_special_transversal(y, {}).accepted);
}

TEST_CASE("the two transversal tests agree on small diagrams") {
  for (const Diagram& d : all_diagrams(5, 3, 3))
    for (const BoxSet& b : all_subsets(d)) CHECK(is_special_transversal(d, b).accepted == is_special_transversal_graph(d, b));
}

TEST_CASE("exact hitting sets") {
  const Diagram y = Diagram::from_partition({3, 2, 1});
  const auto sets = exact_hitting_sets(y);
  CHECK(std::find(sets.begin(), sets.end(), fixture_boxes("young_321_corners.json")) != sets.end());
  for (const BoxSet& b : sets) CHECK(is_exact_hitting_set(y, b));
  // Hexagon: one box per row and column hits all six rectangles exactly once.
  const Diagram hex = fixture_diagram("hexagon.txt");
  for (const BoxSet& b : exact_hitting_sets(hex)) CHECK_FALSE(is_special_transversal(hex, b).accepted);
}

TEST_CASE("single box criterion") {
  const Diagram d = fixture_diagram("branching_not_complete.txt");
  CHECK(branches_off_single_box(d, {1, 1}));
  CHECK_FALSE(branches_off_single_box(d, {1, 3}));
  CHECK_THROWS_AS(branches_off_single_box(d, {2, 2}), DomainError);
}

TEST_CASE("verdicts on fixtures") {
  Classifier c;
  CHECK(c.is_completely_branching(Diagram()));
  CHECK(c.is_completely_branching(Diagram::from_partition({3, 2, 1})));
  CHECK_FALSE(c.is_completely_branching(fixture_diagram("hexagon.txt")));
  CHECK_FALSE(c.is_completely_branching(fixture_diagram("branching_not_complete.txt")));
  CHECK_FALSE(c.is_completely_branching(fixture_diagram("chordal_not_branching.txt")));
  CHECK(c.is_completely_branching(fixture_diagram("straightening.txt")));

  const Diagram d = fixture_diagram("two_branching_sets.txt");
  const Verdict v = c.branches_completely(d);
  REQUIRE(v.answer == Answer::CompletelyBranching);
  REQUIRE(v.certificate);
  CHECK(validate_certificate(*v.certificate));
  // The lexicographic choice picks the mirror image of B2.
  CHECK(v.certificate->branching_set == BoxSet{{1, 2}, {2, 1}});
  const auto complete = c.complete_branching_sets(d);
  CHECK(complete.size() == 2);
  CHECK(std::find(complete.begin(), complete.end(), fixture_boxes("two_branching_sets_b2.json")) != complete.end());
  CHECK(c.branches_completely_wrt(d, fixture_boxes("two_branching_sets_b2.json")));
  CHECK_FALSE(c.branches_completely_wrt(d, fixture_boxes("two_branching_sets_b1.json")));
}

TEST_CASE("refutation of the hexagon") {
  Classifier c;
  const Verdict v = c.branches_completely(fixture_diagram("hexagon.txt"));
  CHECK(v.answer == Answer::NotCompletelyBranching);
  REQUIRE(v.refutation);
  CHECK(v.refutation->exact_hitting_sets > 0);
  CHECK(v.refutation->candidates.empty());
}

TEST_CASE("certificates share equal subdiagrams") {
  Classifier c;
  const Verdict v = c.branches_completely(Diagram::from_partition({2, 2}));
  REQUIRE(v.certificate);
  CHECK(validate_certificate(*v.certificate));
  // Tampering with a branching set breaks validation.
  CertificateNode bad = *v.certificate;
  bad.branching_set = {{1, 2}};
  CHECK_FALSE(validate_certificate(bad));
}

TEST_CASE("class recognition") {
  Classifier c;
  const ClassReport r = recognize_and_certify(fixture_diagram("northwest_forest.txt"), c);
  CHECK(r.classes == std::vector<std::string>{"northwest", "forest"});
  CHECK(r.northwest_accepted);
  CHECK(r.northwest_set == fixture_boxes("northwest_forest_boxes.json"));
  CHECK(r.forest_accepted);
  CHECK(r.verdict == Answer::CompletelyBranching);
}

TEST_CASE("memo is thread safe and consistent") {
  Classifier c;
  std::vector<Diagram> ds = all_diagrams(5, 3, 3);
  std::vector<int> a(ds.size()), b(ds.size());
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < ds.size(); i += 4) a[i] = c.is_completely_branching(ds[i]);
    });
  for (auto& t : pool) t.join();
  Classifier fresh;
  for (std::size_t i = 0; i < ds.size(); ++i) b[i] = fresh.is_completely_branching(ds[i]);
  CHECK(a == b);
}
