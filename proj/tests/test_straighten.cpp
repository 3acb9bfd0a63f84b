#include <doctest.h>

#include <random>
#include <set>

#include "support.hpp"

using namespace specht;
using namespace specht::testing;

namespace {

struct WorkedExample {
  Diagram d = fixture_diagram("straightening.txt");
  ChoiceFunction choice = with_top_choice(young_corner_choice(), d, fixture_boxes("straightening_boxes.json"));
  Tableau t = io::parse_tableau(d, fixture_text("straightening_tableau.txt"));
};

std::vector<TraceTerm> fixture_terms(const Diagram& d, const io::Json& list) {
  std::vector<TraceTerm> out;
  for (const auto& x : list) out.push_back({parse_rational(x[0].get<std::string>()), io::parse_tableau(d, x[1].get<std::string>()), {}});
  return out;
}

}  // namespace

TEST_CASE("chain counts match hook lengths") {
  for (const Partition& p : std::vector<Partition>{{2, 1}, {2, 2}, {3, 1}, {3, 2, 1}, {3, 3}, {4, 2, 1}}) {
    const Diagram d = Diagram::from_partition(p);
    CHECK(chain_basis(d).size() == hook_length_dimension(p));
    CHECK(chain_basis(d, young_corner_choice()).size() == hook_length_dimension(p));
  }
}

TEST_CASE("corner choice gives standard Young tableaux") {
  const Partition p{3, 2, 1};
  const auto standard = standard_tableaux(p);
  const std::set<std::vector<int>> syt(standard.begin(), standard.end());
  std::set<std::vector<int>> chains;
  for (const ChainTableau& c : chain_basis(Diagram::from_partition(p), young_corner_choice())) chains.insert(c.tableau.labels());
  CHECK(chains == syt);
}

TEST_CASE("choice validation") {
  const Diagram d = fixture_diagram("two_branching_sets.txt");
  CHECK_THROWS_AS(ordered_branching_set(d, with_top_choice(lex_choice(), d, fixture_boxes("two_branching_sets_b1.json"))),
                  DomainError);
  CHECK(ordered_branching_set(d, lex_choice()).size() == 2);
  CHECK_THROWS_AS(chain_basis(fixture_diagram("hexagon.txt")), DomainError);
  std::mt19937 rng(1);
  CHECK_THROWS_AS(straighten(random_tableau(fixture_diagram("hexagon.txt"), rng)), DomainError);
}

TEST_CASE("worked example: first step is the displayed three-column relation") {
  const WorkedExample ex;
  CHECK(chain_basis(ex.d, ex.choice).size() == 11);
  const StraightenResult r = straighten(ex.t, ex.choice);
  REQUIRE(r.trace);
  CHECK(verify_trace(*r.trace).ok);
  REQUIRE(!r.trace->steps.empty());
  const TraceStep& first = r.trace->steps.front();
  CHECK(first.kind == TraceStep::Kind::ExtendedGarnir);
  CHECK(first.placement == 2);

  const io::Json paper = io::Json::parse(fixture_text("straightening_step.json"));
  const ColumnQuotient q(ex.d);
  CHECK(expand_terms(q, first.lhs) == expand_terms(q, fixture_terms(ex.d, paper["lhs"])));
  CHECK(expand_terms(q, first.rhs) == expand_terms(q, fixture_terms(ex.d, paper["rhs"])));
  for (const TraceTerm& g : first.garnir) {
    REQUIRE(g.stab);
    CHECK(validate_garnir(ex.d, *g.stab));
    CHECK(g.stab->columns.size() == 3);
  }

  const std::map<std::string, Rational> expected{
      {"124/3/.5", 1}, {"134/2/.5", -1}, {"425/3/.1", -1}, {"435/1/.2", -1}, {"435/2/.1", 1}};
  std::map<std::string, Rational> got;
  for (const auto& [tab, c] : r.coordinates) got[to_string(tab)] = c;
  CHECK(got == expected);
}

TEST_CASE("transcribed worked step verifies and holds in the oracle") {
  const WorkedExample ex;
  const io::Json paper = io::Json::parse(fixture_text("straightening_step.json"));
  const auto lhs = fixture_terms(ex.d, paper["lhs"]);
  const auto rhs = fixture_terms(ex.d, paper["rhs"]);

  // As elements of S^D: e_T equals the five terms on the right.
  const DenseVector sym = young_symmetrizer_dense(ex.d);
  DenseVector diff = specht_vector_dense(lhs[0].tableau, sym);
  for (const TraceTerm& x : rhs) {
    const DenseVector v = specht_vector_dense(x.tableau, sym);
    const long long c = static_cast<long long>(boost::multiprecision::numerator(x.coef));
    for (std::size_t i = 0; i < v.size(); ++i) diff[i] -= c * v[i];
  }
  CHECK(all_zero(diff));

  // The produced trace with its first step replaced by the transcription still verifies.
  StraighteningTrace trace = *straighten(ex.t, ex.choice).trace;
  trace.steps.front().lhs = lhs;
  trace.steps.front().rhs = rhs;
  const TraceCheck check = verify_trace(trace);
  CHECK_MESSAGE(check.ok, check.reason);
}

TEST_CASE("chain tableau input has an empty trace") {
  const WorkedExample ex;
  for (const ChainTableau& c : chain_basis(ex.d, ex.choice)) {
    const StraightenResult r = straighten(c.tableau, ex.choice);
    CHECK(r.trace->steps.empty());
    CHECK(r.coordinates == std::map<Tableau, Rational>{{c.tableau, 1}});
  }
}

TEST_CASE("mutated traces are rejected") {
  const WorkedExample ex;
  const StraighteningTrace good = *straighten(ex.t, ex.choice).trace;
  REQUIRE(verify_trace(good).ok);

  StraighteningTrace bad = good;
  bad.coordinates.front().second += 1;
  const TraceCheck c1 = verify_trace(bad);
  CHECK_FALSE(c1.ok);
  CHECK(c1.reason.find("telescop") != std::string::npos);

  bad = good;
  bad.steps.front().rhs.front().coef *= 2;
  CHECK_FALSE(verify_trace(bad).ok);

  bad = good;
  REQUIRE(!bad.steps.front().garnir.empty());
  bad.steps.front().garnir.front().stab->sets.back().pop_back();
  CHECK_FALSE(verify_trace(bad).ok);
}

TEST_CASE("random tableaux on (2,2) match the oracle solve") {
  std::mt19937 rng(22);
  const Diagram d = Diagram::from_partition({2, 2});
  for (int k = 0; k < 20; ++k) {
    std::string why;
    CHECK_MESSAGE(straighten_matches_oracle(random_tableau(d, rng), lex_choice(), &why), why);
  }
}

TEST_CASE("straightening is linear") {
  std::mt19937 rng(8);
  const Diagram d = fixture_diagram("two_branching_sets.txt");
  const ChoiceFunction choice = lex_choice();
  for (int k = 0; k < 5; ++k) {
    const Tableau a = random_tableau(d, rng), b = random_tableau(d, rng);
    const Rational alpha(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 4));
    const Rational beta(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 4));
    const StraightenResult ra = straighten(a, choice), rb = straighten(b, choice);
    const StraightenResult rab = straighten({{a, alpha}, {b, beta}}, choice);
    CHECK(verify_trace(*rab.trace).ok);
    std::map<Tableau, Rational> sum;
    for (const auto& [t, c] : ra.coordinates) sum[t] += alpha * c;
    for (const auto& [t, c] : rb.coordinates) sum[t] += beta * c;
    std::erase_if(sum, [](const auto& x) { return x.second == 0; });
    CHECK(sum == rab.coordinates);
  }
}

TEST_CASE("placements strictly increase in every trace") {
  std::mt19937 rng(4);
  const Diagram d = fixture_diagram("two_branching_sets.txt");
  for (int k = 0; k < 10; ++k) {
    const StraightenResult r = straighten(random_tableau(d, rng), lex_choice());
    int last = 0;
    for (const TraceStep& s : r.trace->steps) {
      if (s.placement == 0) continue;
      CHECK(s.placement > last);
      last = s.placement;
    }
  }
}
