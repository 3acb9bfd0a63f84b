#include "specht/partition.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "specht/errors.hpp"

namespace specht {

bool is_partition(const Partition& p) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] <= 0) return false;
    if (k > 0 && p[k] > p[k - 1]) return false;
  }
  return true;
}

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> gen = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(left, cap); part >= 1; --part) {
      cur.push_back(part);
      gen(left - part, part);
      cur.pop_back();
    }
  };
  gen(n, n);
  return out;
}

Partition conjugate(const Partition& p) {
  Partition out;
  if (p.empty()) return out;
  for (int j = 1; j <= p[0]; ++j) {
    int len = 0;
    for (int part : p)
      if (part >= j) ++len;
    out.push_back(len);
  }
  return out;
}

std::vector<Partition> remove_corners(const Partition& p) {
  std::vector<Partition> out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k + 1 < p.size() && p[k + 1] == p[k]) continue;
    Partition q = p;
    if (--q[k] == 0) q.pop_back();
    out.push_back(q);
  }
  return out;
}

std::uint64_t hook_length_dimension(const Partition& p) {
  const Partition c = conjugate(p);
  const int n = partition_size(p);
  // Multiply and divide alternately to stay within 64 bits for moderate n.
  std::vector<int> hooks;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) hooks.push_back((p[i] - j - 1) + (c[j] - static_cast<int>(i) - 1) + 1);
  unsigned __int128 num = 1;
  for (int k = 2; k <= n; ++k) num *= static_cast<unsigned>(k);
  unsigned __int128 den = 1;
  for (int h : hooks) den *= static_cast<unsigned>(h);
  return static_cast<std::uint64_t>(num / den);
}

std::vector<std::vector<int>> standard_tableaux(const Partition& p) {
  const int n = partition_size(p);
  std::vector<int> offset(p.size(), 0);
  for (std::size_t i = 1; i < p.size(); ++i) offset[i] = offset[i - 1] + p[i - 1];
  std::vector<std::vector<int>> out;
  std::vector<int> filled(p.size(), 0);
  std::vector<int> labels(n, 0);
  std::function<void(int)> place = [&](int label) {
    if (label > n) {
      out.push_back(labels);
      return;
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (filled[i] >= p[i]) continue;
      if (i > 0 && filled[i - 1] <= filled[i]) continue;
      labels[offset[i] + filled[i]] = label;
      ++filled[i];
      place(label + 1);
      --filled[i];
    }
  };
  place(1);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k > 0) s += ",";
    s += std::to_string(p[k]);
  }
  return s + ")";
}

Partition parse_partition(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != ' ') t.push_back(ch);
  Partition out;
  if (t.find(',') == std::string::npos && t.find('^') == std::string::npos) {
    for (char ch : t) {
      if (ch < '1' || ch > '9') throw ParseError("bad partition '" + text + "'", 1, 1);
      out.push_back(ch - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= t.size()) {
      std::size_t end = t.find(',', pos);
      if (end == std::string::npos) end = t.size();
      const std::string item = t.substr(pos, end - pos);
      const std::size_t caret = item.find('^');
      try {
        const int part = std::stoi(item.substr(0, caret));
        const int times = caret == std::string::npos ? 1 : std::stoi(item.substr(caret + 1));
        for (int k = 0; k < times; ++k) out.push_back(part);
      } catch (const std::logic_error&) {
        throw ParseError("bad partition '" + text + "'", 1, static_cast<int>(pos) + 1);
      }
      pos = end + 1;
    }
  }
  if (!is_partition(out)) throw ParseError("parts of '" + text + "' are not weakly decreasing", 1, 1);
  return out;
}

namespace {

std::int64_t mn_beta(std::vector<int> beta, const Partition& mu, std::size_t k,
                     std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t>& memo) {
  if (k == mu.size()) return 1;
  auto key = std::make_pair(beta, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const int r = mu[k];
  std::int64_t total = 0;
  for (std::size_t t = 0; t < beta.size(); ++t) {
    const int b = beta[t];
    const int target = b - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int x : beta)
      if (x > target && x < b) ++between;
    std::vector<int> next = beta;
    next[t] = target;
    std::sort(next.rbegin(), next.rend());
    const std::int64_t sub = mn_beta(next, mu, k + 1, memo);
    total += (between % 2 == 0 ? 1 : -1) * sub;
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

std::int64_t irreducible_character(const Partition& shape, const Partition& cycle_type) {
  if (partition_size(shape) != partition_size(cycle_type))
    throw DomainError("character of " + to_string(shape) + " at class " + to_string(cycle_type));
  static std::shared_mutex mutex;
  static std::map<std::pair<Partition, Partition>, std::int64_t> cache;
  const auto key = std::make_pair(shape, cycle_type);
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<int> beta;
  const int len = static_cast<int>(shape.size());
  for (int i = 0; i < len; ++i) beta.push_back(shape[i] + (len - 1 - i));
  std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t> memo;
  const std::int64_t value = mn_beta(beta, cycle_type, 0, memo);
  std::unique_lock lock(mutex);
  cache.emplace(key, value);
  return value;
}

std::vector<ConjugacyClass> conjugacy_classes(int n) {
  std::vector<ConjugacyClass> out;
  const std::uint64_t nfact = factorial(n);
  for (const Partition& mu : partitions_of(n)) {
    ConjugacyClass cls;
    cls.cycle_type = mu;
    std::uint64_t z = 1;
    std::map<int, int> mult;
    for (int part : mu) {
      z *= static_cast<std::uint64_t>(part);
      ++mult[part];
    }
    for (const auto& [part, m] : mult) z *= factorial(m);
    cls.size = nfact / z;
    std::vector<int> images(n);
    int start = 0;
    for (int part : mu) {
      for (int t = 0; t < part; ++t) images[start + t] = start + (t + 1) % part + 1;
      start += part;
    }
    cls.representative = Permutation(images);
    out.push_back(std::move(cls));
  }
  return out;
}

MultiplicityVector restrict_multiplicities(const MultiplicityVector& m) {
  MultiplicityVector out;
  for (const auto& [shape, mult] : m)
    for (const Partition& q : remove_corners(shape))
      out[q] += mult;
  return out;
}

std::uint64_t dimension_of(const MultiplicityVector& m) {
  std::uint64_t total = 0;
  for (const auto& [shape, mult] : m) total += static_cast<std::uint64_t>(mult) * hook_length_dimension(shape);
  return total;
}

}  // namespace specht
