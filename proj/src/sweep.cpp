#include "specht/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "specht/errors.hpp"
#include "specht/oracle.hpp"
#include "specht/transversal.hpp"

namespace specht {

namespace {

constexpr double kSubsetBudget = 5e7;

double binomial(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <class F>
void parallel_for(std::size_t count, int jobs, F&& body) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) body(i);
  };
  const int n = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
}

bool induced_closed(const Diagram& d, Classifier& classifier) {
  const std::vector<int> rows = d.occupied_rows();
  const std::vector<int> cols = d.occupied_cols();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::vector<int> keep = rows;
    keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(k));
    if (!classifier.is_completely_branching(induced_subdiagram(d, keep, cols))) return false;
  }
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::vector<int> keep = cols;
    keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(k));
    if (!classifier.is_completely_branching(induced_subdiagram(d, rows, keep))) return false;
  }
  return true;
}

}  // namespace

std::vector<Diagram> enumerate_classes(int max_boxes, int rows, int cols) {
  if (max_boxes < 0 || rows < 0 || cols < 0) throw DomainError("sweep bounds must be nonnegative");
  if (rows > Diagram::kMaxExtent || cols > Diagram::kMaxExtent) throw CapacityError("grid exceeds the diagram extent");
  const int cells = rows * cols;
  const int top = std::min(max_boxes, cells);
  double subsets = 0;
  for (int k = 0; k <= top; ++k) subsets += binomial(cells, k);
  if (subsets > kSubsetBudget) throw CapacityError("sweep would visit about " + std::to_string(subsets) + " subsets");

  std::unordered_set<std::string> seen;
  std::vector<Diagram> out;
  std::vector<Cell> chosen;
  std::function<void(int)> grow = [&](int from) {
    const Diagram d(chosen);
    if (seen.insert(canonical_key(d)).second) out.push_back(canonical_form(d).diagram);
    if (static_cast<int>(chosen.size()) == top) return;
    for (int k = from; k < cells; ++k) {
      chosen.push_back({k / cols + 1, k % cols + 1});
      grow(k + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  std::sort(out.begin(), out.end(), [](const Diagram& a, const Diagram& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool oracle_completely_branching(const Diagram& d) {
  static std::shared_mutex mutex;
  static std::unordered_map<std::string, bool> memo;
  if (d.empty()) return true;
  if (static_cast<int>(d.size()) > kTargetedBound) throw CapacityError("diagram exceeds the targeted oracle bound");
  const std::string key = canonical_key(d);
  {
    std::shared_lock lock(mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  bool value = false;
  for (const BoxSet& b : exact_hitting_sets(d)) {
    if (!is_special_transversal(d, b).accepted || !verify_branching(d, b)) continue;
    bool all = true;
    for (const Cell& x : b)
      if (!oracle_completely_branching(d.without(x))) {
        all = false;
        break;
      }
    if (all) {
      value = true;
      break;
    }
  }
  std::unique_lock lock(mutex);
  memo.try_emplace(key, value);
  return value;
}

bool SweepReport::clean() const {
  return northwest_not_branching.empty() && forest_not_branching.empty() && branching_not_gamma_freeable.empty() &&
         induced_closure_failures.empty() && oracle_disagreements.empty();
}

SweepReport run_sweep(const SweepOptions& options, Classifier& classifier) {
  using Clock = std::chrono::steady_clock;
  auto since = [](Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); };
  SweepReport r;
  r.options = options;

  auto t0 = Clock::now();
  const std::vector<Diagram> classes = enumerate_classes(options.max_boxes, options.rows, options.cols);
  r.seconds["enumerate"] = since(t0);
  r.classes = classes.size();

  struct Row {
    bool branching = false, northwest = false, forest = false, gamma = false, closed = true;
    bool oracle_checked = false, oracle_agrees = true;
  };
  std::vector<Row> rows(classes.size());

  t0 = Clock::now();
  parallel_for(classes.size(), options.jobs, [&](std::size_t i) {
    const Diagram& d = classes[i];
    Row& x = rows[i];
    x.branching = classifier.is_completely_branching(d);
    x.northwest = is_northwest(d).northwest;
    x.forest = is_forest(d);
    x.gamma = is_gamma_freeable(d);
    if (x.branching) x.closed = induced_closed(d, classifier);
  });
  r.seconds["classify"] = since(t0);

  if (options.oracle) {
    t0 = Clock::now();
    const int bound = std::min(options.oracle_max_boxes, kTargetedBound);
    // Smallest first so the oracle memo fills bottom-up.
    for (int n = 0; n <= bound; ++n)
      parallel_for(classes.size(), options.jobs, [&](std::size_t i) {
        if (static_cast<int>(classes[i].size()) != n) return;
        rows[i].oracle_checked = true;
        rows[i].oracle_agrees = oracle_completely_branching(classes[i]) == rows[i].branching;
      });
    r.seconds["oracle"] = since(t0);
  }

  for (std::size_t i = 0; i < classes.size(); ++i) {
    const Diagram& d = classes[i];
    const Row& x = rows[i];
    auto& bucket = r.by_size[static_cast<int>(d.size())];
    if (x.branching) {
      ++r.completely_branching;
      ++bucket.first;
      r.branching_classes.push_back(d);
    } else {
      ++r.not_completely_branching;
      ++bucket.second;
      r.nonbranching_classes.push_back(d);
    }
    r.northwest += x.northwest;
    r.forest += x.forest;
    r.gamma_freeable += x.gamma;
    if (x.northwest && !x.branching) r.northwest_not_branching.push_back(d);
    if (x.forest && !x.branching) r.forest_not_branching.push_back(d);
    if (x.branching && !x.gamma) r.branching_not_gamma_freeable.push_back(d);
    if (!x.closed) r.induced_closure_failures.push_back(d);
    r.oracle_checked += x.oracle_checked;
    if (!x.oracle_agrees) r.oracle_disagreements.push_back(d);
  }
  return r;
}

}  // namespace specht
