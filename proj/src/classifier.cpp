#include "specht/classifier.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "specht/errors.hpp"

namespace specht {

bool branches_off_single_box(const Diagram& d, Cell x) {
  if (!d.contains(x)) throw DomainError("box " + to_string(x) + " is not in the diagram");
  for (const Cell& c : d.cells())
    if (!d.contains({x.row, c.col}) || !d.contains({c.row, x.col})) return false;
  return true;
}

std::string to_string(Answer a) {
  return a == Answer::CompletelyBranching ? "CompletelyBranching" : "NotCompletelyBranching";
}

bool Classifier::lookup(const std::string& key, bool& value) const {
  std::shared_lock lock(mutex_);
  auto it = memo_.find(key);
  if (it == memo_.end()) return false;
  value = it->second;
  return true;
}

void Classifier::store(const std::string& key, bool value) {
  std::unique_lock lock(mutex_);
  memo_.try_emplace(key, value);
}

std::size_t Classifier::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

void Classifier::clear() {
  std::unique_lock lock(mutex_);
  memo_.clear();
}

std::vector<BoxSet> Classifier::candidate_sets(const Diagram& d) {
  std::vector<BoxSet> out;
  for (BoxSet& b : exact_hitting_sets(d))
    if (is_special_transversal(d, b).accepted) out.push_back(std::move(b));
  return out;
}

bool Classifier::branches_completely_wrt(const Diagram& d, const BoxSet& b) {
  for (const Cell& x : b)
    if (!is_completely_branching(d.without(x))) return false;
  return true;
}

bool Classifier::is_completely_branching(const Diagram& d) {
  if (d.empty()) return true;
  const std::string key = canonical_key(d);
  bool value = false;
  if (lookup(key, value)) return value;
  // Work on the canonical representative so equal keys see identical input.
  const Diagram c = canonical_form(d).diagram;
  value = false;
  for (const BoxSet& b : candidate_sets(c))
    if (branches_completely_wrt(c, b)) {
      value = true;
      break;
    }
  store(key, value);
  return value;
}

std::vector<BoxSet> Classifier::complete_branching_sets(const Diagram& d) {
  std::vector<BoxSet> out;
  for (BoxSet& b : candidate_sets(d))
    if (branches_completely_wrt(d, b)) out.push_back(std::move(b));
  return out;
}

BoxSet Classifier::first_branching_set(const Diagram& d) {
  if (d.empty()) return {};
  for (BoxSet& b : candidate_sets(d))
    if (branches_completely_wrt(d, b)) return std::move(b);
  return {};
}

std::shared_ptr<const Refutation> Classifier::refute(const Diagram& d, bool top) {
  auto ref = std::make_shared<Refutation>();
  ref->diagram = d;
  ref->exact_hitting_sets = exact_hitting_sets(d).size();
  ref->candidates = candidate_sets(d);
  for (const BoxSet& b : ref->candidates) {
    for (const Cell& x : b) {
      if (is_completely_branching(d.without(x))) continue;
      ref->failures.push_back({b, x});
      break;
    }
    if (!top) break;
  }
  if (!ref->failures.empty()) ref->child = refute(d.without(ref->failures.front().failing_box), false);
  return ref;
}

Verdict Classifier::branches_completely(const Diagram& d) {
  Verdict v;
  if (!is_completely_branching(d)) {
    v.answer = Answer::NotCompletelyBranching;
    v.refutation = refute(d, true);
    return v;
  }
  v.answer = Answer::CompletelyBranching;
  std::map<std::vector<Cell>, std::shared_ptr<const CertificateNode>> built;
  std::function<std::shared_ptr<const CertificateNode>(const Diagram&)> build = [&](const Diagram& x) {
    auto it = built.find(x.cells());
    if (it != built.end()) return it->second;
    auto node = std::make_shared<CertificateNode>();
    node->diagram = x;
    node->branching_set = first_branching_set(x);
    for (const Cell& b : node->branching_set) node->children.emplace_back(b, build(x.without(b)));
    built.emplace(x.cells(), node);
    return std::shared_ptr<const CertificateNode>(node);
  };
  v.certificate = build(d);
  return v;
}

Classifier& shared_classifier() {
  static Classifier instance;
  return instance;
}

bool validate_certificate(const CertificateNode& node) {
  std::map<const CertificateNode*, bool> done;
  std::function<bool(const CertificateNode&)> check = [&](const CertificateNode& x) {
    auto it = done.find(&x);
    if (it != done.end()) return it->second;
    bool ok = true;
    if (x.diagram.empty()) {
      ok = x.branching_set.empty() && x.children.empty();
    } else {
      ok = !x.branching_set.empty() && x.children.size() == x.branching_set.size();
      for (const Cell& b : x.branching_set) ok = ok && x.diagram.contains(b);
      ok = ok && is_special_transversal(x.diagram, x.branching_set).accepted &&
           is_exact_hitting_set(x.diagram, x.branching_set);
      for (std::size_t k = 0; ok && k < x.children.size(); ++k) {
        const auto& [b, child] = x.children[k];
        ok = b == x.branching_set[k] && child && child->diagram == x.diagram.without(b) && check(*child);
      }
    }
    done[&x] = ok;
    return ok;
  };
  return check(node);
}

ClassReport recognize_and_certify(const Diagram& d, Classifier& classifier) {
  ClassReport report;
  const NorthwestCheck nw = is_northwest(d);
  if (nw.northwest) {
    report.classes.push_back("northwest");
    const Diagram reordered = reorder_rows(d, nw.row_order);
    for (const Cell& c : northwest_branching_set(reordered))
      report.northwest_set.push_back({nw.row_order[c.row - 1], c.col});
    report.northwest_set = sorted_boxes(report.northwest_set);
    report.northwest_accepted = is_special_transversal(d, report.northwest_set).accepted &&
                                is_exact_hitting_set(d, report.northwest_set) &&
                                classifier.branches_completely_wrt(d, report.northwest_set);
  }
  if (is_forest(d)) {
    report.classes.push_back("forest");
    const std::vector<BoxSet> matchings = almost_perfect_matchings(d);
    if (!matchings.empty()) {
      report.forest_set = matchings.front();
      report.forest_accepted = is_special_transversal(d, report.forest_set).accepted &&
                               is_exact_hitting_set(d, report.forest_set) &&
                               classifier.branches_completely_wrt(d, report.forest_set);
    }
  }
  report.verdict = classifier.is_completely_branching(d) ? Answer::CompletelyBranching
                                                         : Answer::NotCompletelyBranching;
  return report;
}

}  // namespace specht
