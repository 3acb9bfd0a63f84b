#pragma once

#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "specht/diagram.hpp"
#include "specht/transversal.hpp"

namespace specht {

/// True iff every maximal rectangle of d contains x. Throws DomainError if x is not in d.
bool branches_off_single_box(const Diagram& d, Cell x);

enum class Answer { CompletelyBranching, NotCompletelyBranching };

std::string to_string(Answer a);

/// Node of a certificate. Equal subdiagrams reached along different removal
/// orders share one node, so a certificate is a DAG.
struct CertificateNode {
  Diagram diagram;
  BoxSet branching_set;
  /// One entry per box of branching_set, same order.
  std::vector<std::pair<Cell, std::shared_ptr<const CertificateNode>>> children;
};

struct CandidateFailure {
  BoxSet candidate;
  /// Removing this box gives a diagram that does not branch completely.
  Cell failing_box;
};

struct Refutation {
  Diagram diagram;
  std::size_t exact_hitting_sets = 0;
  /// Special transversals among the exact hitting sets.
  std::vector<BoxSet> candidates;
  /// Every candidate at the top level, only the first one further down.
  std::vector<CandidateFailure> failures;
  /// Refutation of the first failing child, when some candidate existed.
  std::shared_ptr<const Refutation> child;
};

struct Verdict {
  Answer answer = Answer::NotCompletelyBranching;
  std::shared_ptr<const CertificateNode> certificate;
  std::shared_ptr<const Refutation> refutation;
};

/// Complete-branching decision by the maximal-rectangle recursion, memoized
/// on canonical keys. Safe to share between threads.
class Classifier {
 public:
  bool is_completely_branching(const Diagram& d);
  Verdict branches_completely(const Diagram& d);

  /// Special-transversal exact hitting sets of d, lexicographic order.
  std::vector<BoxSet> candidate_sets(const Diagram& d);
  /// All candidates whose single-box removals all branch completely.
  std::vector<BoxSet> complete_branching_sets(const Diagram& d);
  /// Lexicographically least complete branching set; empty when there is none
  /// (or d is empty).
  BoxSet first_branching_set(const Diagram& d);
  bool branches_completely_wrt(const Diagram& d, const BoxSet& b);

  std::size_t memo_size() const;
  void clear();

 private:
  bool lookup(const std::string& key, bool& value) const;
  void store(const std::string& key, bool value);
  std::shared_ptr<const Refutation> refute(const Diagram& d, bool top);

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, bool> memo_;
};

/// Process-wide classifier instance.
Classifier& shared_classifier();

/// Re-checks a certificate bottom-up: each branching set is a special
/// transversal and exact hitting set, children are the single-box removals,
/// leaves are empty.
bool validate_certificate(const CertificateNode& node);

struct ClassReport {
  std::vector<std::string> classes;  // "northwest", "forest"
  /// Class-specific branching set in the coordinates of the input.
  BoxSet northwest_set;
  bool northwest_accepted = false;
  BoxSet forest_set;
  bool forest_accepted = false;
  Answer verdict = Answer::NotCompletelyBranching;
};

ClassReport recognize_and_certify(const Diagram& d, Classifier& classifier);

}  // namespace specht
