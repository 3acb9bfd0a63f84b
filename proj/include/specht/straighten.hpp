#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "specht/algebra.hpp"
#include "specht/classifier.hpp"
#include "specht/garnir.hpp"

namespace specht {

/// Picks the branching set B(D) used at every level of a chain.
struct ChoiceFunction {
  std::string name;
  std::function<BoxSet(const Diagram&)> select;
  /// Young levels are straightened with classical row-descent Garnir
  /// relations (their chain basis is then the standard Young tableaux).
  bool classical_young = false;
};

/// Lexicographically least complete branching set at every level.
ChoiceFunction lex_choice(Classifier& classifier = shared_classifier());
/// Corner set for Young diagrams, lexicographic otherwise.
ChoiceFunction young_corner_choice(Classifier& classifier = shared_classifier());
/// base, except that diagram top uses branching set b.
ChoiceFunction with_top_choice(ChoiceFunction base, const Diagram& top, const BoxSet& b);

/// B(d) in special-transversal order. Throws DomainError unless d branches
/// completely and the chosen set is an exact-hitting special transversal
/// whose removals all branch completely.
BoxSet ordered_branching_set(const Diagram& d, const ChoiceFunction& choice,
                             Classifier& classifier = shared_classifier());

/// Label j sits in the box added at step j of a chain of completely
/// branching subdiagrams.
struct ChainTableau {
  Tableau tableau;
  /// boxes[j-1] = box holding label j.
  std::vector<Cell> boxes;
  std::string choice;
};

std::vector<ChainTableau> chain_basis(const Diagram& d, const ChoiceFunction& choice,
                                      Classifier& classifier = shared_classifier());
std::vector<ChainTableau> chain_basis(const Diagram& d);

/// coef * [tableau * signed stabilizer sum of stab], or coef * [tableau]
/// without a datum; read modulo one-column relations.
struct TraceTerm {
  Rational coef;
  Tableau tableau;
  std::optional<GarnirDatum> stab;
};

struct StraighteningTrace;

/// Identity sum(lhs) = sum(rhs) + sum(garnir) modulo one-column relations
/// in the column quotient of the level diagram; every garnir datum is valid
/// in that diagram.
struct TraceStep {
  enum class Kind { OneColumn, TwoColumnGarnir, ColumnsGarnir, ExtendedGarnir, Move };
  Kind kind = Kind::OneColumn;
  /// 1-based index of the branching box holding the largest label on the
  /// left side; 0 when the label is not yet in a branching box.
  int placement = 0;
  std::vector<TraceTerm> lhs;
  std::vector<TraceTerm> rhs;
  std::vector<TraceTerm> garnir;
  /// Finer identities at the same level.
  std::vector<TraceStep> details;
  /// Straightening of the stripped left side one level down.
  std::shared_ptr<const StraighteningTrace> child;
};

std::string to_string(TraceStep::Kind k);

struct StraighteningTrace {
  Diagram diagram;
  std::string choice;
  /// "branching" or "classical".
  std::string method;
  BoxSet branching;
  std::vector<TraceTerm> input;
  std::vector<std::pair<Tableau, Rational>> coordinates;
  std::vector<TraceStep> steps;
};

struct StraightenResult {
  std::map<Tableau, Rational> coordinates;
  std::shared_ptr<const StraighteningTrace> trace;
};

StraightenResult straighten(const Tableau& t, const ChoiceFunction& choice,
                            Classifier& classifier = shared_classifier());
StraightenResult straighten(const Tableau& t);
/// Linear combination of tableaux of one shape.
StraightenResult straighten(const std::vector<std::pair<Tableau, Rational>>& x, const ChoiceFunction& choice,
                            Classifier& classifier = shared_classifier());

struct TraceCheck {
  bool ok = true;
  /// Path of step indices into nested traces; empty for a top-level failure.
  std::vector<int> failing_step;
  std::string reason;
};

/// Re-expands every step identity in the column quotient, re-validates every
/// Garnir datum, checks the telescoped identity input = coordinates + Garnir
/// terms and the placement order.
TraceCheck verify_trace(const StraighteningTrace& trace);

/// Expansion of a term list in the column quotient of d.
ColumnQuotient::Vector expand_terms(const ColumnQuotient& q, const std::vector<TraceTerm>& terms);

}  // namespace specht
