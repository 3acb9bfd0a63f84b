#include <doctest.h>

#include "support.hpp"

using namespace specht;
using namespace specht::testing;

TEST_CASE("tableau text forms") {
  const Diagram d = fixture_diagram("straightening.txt");
  const Tableau a = io::parse_tableau(d, "214/3/.5");
  CHECK(io::parse_tableau(d, "2 1 4\n3\n. 5\n") == a);
  CHECK(io::parse_tableau(d, R"({"entries": [[1,1,2],[1,2,1],[1,3,4],[2,1,3],[3,2,5]]})") == a);
  CHECK(to_string(a) == "214/3/.5");
  CHECK(io::parse_tableau(to_string(a)) == a);
  CHECK_THROWS_AS(io::parse_tableau(d, "21/3/.5"), DomainError);
  CHECK_THROWS_AS(io::parse_tableau(d, "21x/3/.5"), ParseError);
  CHECK_THROWS_AS(io::parse_tableau(d, "211/3/.5"), DomainError);

  std::vector<Cell> row;
  for (int c = 1; c <= 11; ++c) row.push_back({1, c});
  const Tableau wide = Tableau::reference(Diagram(row));
  CHECK(io::parse_tableau(to_string(wide)) == wide);
}

TEST_CASE("datum and box set files") {
  const GarnirDatum g = io::parse_datum(fixture_text("move_relation_datum.json"));
  CHECK(g.columns == std::vector<int>{1, 2, 3});
  CHECK(io::parse_datum(io::to_json(g).dump()) == g);
  CHECK(fixture_boxes("two_branching_sets_b2.json") == BoxSet{{2, 3}, {3, 2}});
  CHECK_THROWS_AS(io::parse_boxset("{\"cells\": []}"), ParseError);
}

TEST_CASE("multiplicities print largest partition first") {
  const io::Json j = io::to_json(MultiplicityVector{{{2, 2, 2}, 1}, {{3, 3}, 1}, {{3, 2, 1}, 2}});
  CHECK(j.dump() == R"x({"(3,3)":1,"(3,2,1)":2,"(2,2,2)":1})x");
}

TEST_CASE("certificate JSON reuses shared nodes") {
  const Verdict v = shared_classifier().branches_completely(Diagram::from_partition({2, 2}));
  const std::string s = io::to_json(v).dump();
  CHECK(s.find("\"certificate\"") != std::string::npos);
  // Two removal orders from (2,1) reach the same one-box node.
  CHECK(s.find("\"ref\"") != std::string::npos);
}

TEST_CASE("trace JSON") {
  const Diagram d = fixture_diagram("straightening.txt");
  const auto choice = with_top_choice(young_corner_choice(), d, fixture_boxes("straightening_boxes.json"));
  const StraightenResult r = straighten(io::parse_tableau(d, "214/3/.5"), choice);
  const io::Json j = io::to_json(*r.trace);
  CHECK(j["steps"][0]["kind"] == "extended_garnir");
  CHECK(j["steps"][0]["garnir"][0]["coeff"] == "1/2");
  CHECK(j["coordinates"].size() == 5);
}
