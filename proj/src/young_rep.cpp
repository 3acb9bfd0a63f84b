#include "specht/young_rep.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <shared_mutex>

#include "specht/errors.hpp"

namespace specht {

namespace {

using Key = std::uint64_t;  // row of label l in bits 4*(n-l) .. 4*(n-l)+3

int row_in_key(Key k, int n, int label) { return static_cast<int>((k >> (4 * (n - label))) & 0xF); }

Key swap_labels(Key k, int n, int a) {
  const int ra = row_in_key(k, n, a);
  const int rb = row_in_key(k, n, a + 1);
  const int sa = 4 * (n - a);
  const int sb = 4 * (n - a - 1);
  k &= ~((Key{0xF} << sa) | (Key{0xF} << sb));
  return k | (static_cast<Key>(rb) << sa) | (static_cast<Key>(ra) << sb);
}

struct Polytabloid {
  std::vector<std::pair<Key, std::int64_t>> terms;  // sorted by key
};

// Sum over the column group of t with signs, as tabloids.
Polytabloid polytabloid(const Partition& shape, const std::vector<int>& labels) {
  const int n = partition_size(shape);
  std::vector<int> row_start(shape.size() + 1, 0);
  for (std::size_t r = 0; r < shape.size(); ++r) row_start[r + 1] = row_start[r] + shape[r];
  std::vector<std::vector<int>> columns(shape.empty() ? 0 : shape[0]);
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) columns[c].push_back(labels[row_start[r] + c]);

  std::map<Key, std::int64_t> acc;
  std::vector<int> row_of(n + 1, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t c, int sign) {
    if (c == columns.size()) {
      Key k = 0;
      for (int l = 1; l <= n; ++l) k |= static_cast<Key>(row_of[l]) << (4 * (n - l));
      acc[k] += sign;
      return;
    }
    std::vector<int> col = columns[c];
    std::vector<int> order(col.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    do {
      int inversions = 0;
      for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
          if (order[i] > order[j]) ++inversions;
      for (std::size_t i = 0; i < order.size(); ++i) row_of[col[order[i]]] = static_cast<int>(i);
      rec(c + 1, inversions % 2 == 0 ? sign : -sign);
    } while (std::next_permutation(order.begin(), order.end()));
  };
  rec(0, 1);
  Polytabloid p;
  for (const auto& [k, v] : acc)
    if (v != 0) p.terms.emplace_back(k, v);
  return p;
}

std::uint64_t column_group_order(const Partition& shape) {
  std::uint64_t total = 1;
  for (int len : conjugate(shape)) total *= factorial(len);
  return total;
}

}  // namespace

YoungNaturalRep::YoungNaturalRep(const Partition& shape, std::size_t max_dimension) : shape_(shape) {
  if (!is_partition(shape)) throw DomainError("not a partition: " + to_string(shape));
  n_ = partition_size(shape);
  if (n_ > 16 || shape.size() > 15) throw CapacityError("natural representation supports at most 16 boxes");
  if (hook_length_dimension(shape) > max_dimension)
    throw CapacityError("dimension of " + to_string(shape) + " exceeds the cap of " + std::to_string(max_dimension));
  tableaux_ = standard_tableaux(shape);
  const std::size_t f = tableaux_.size();

  std::vector<Polytabloid> basis(f);
  std::unordered_map<Key, std::uint32_t> leading;
  for (std::size_t k = 0; k < f; ++k) {
    basis[k] = polytabloid(shape, tableaux_[k]);
    leading.emplace(basis[k].terms.front().first, static_cast<std::uint32_t>(k));
  }

  adjacent_.assign(n_ > 0 ? n_ - 1 : 0, std::vector<SparseColumn>(f));
  for (int i = 1; i < n_; ++i) {
    for (std::size_t k = 0; k < f; ++k) {
      std::map<Key, std::int64_t> v;
      for (const auto& [key, c] : basis[k].terms) v[swap_labels(key, n_, i)] += c;
      SparseColumn col;
      while (!v.empty()) {
        auto first = v.begin();
        if (first->second == 0) {
          v.erase(first);
          continue;
        }
        auto lead = leading.find(first->first);
        if (lead == leading.end()) throw ConsistencyError("straightening in the tabloid module failed");
        const std::int64_t a = first->second;
        col.emplace_back(lead->second, a);
        for (const auto& [key, c] : basis[lead->second].terms) {
          auto it = v.try_emplace(key, 0).first;
          it->second -= a * c;
          if (it->second == 0) v.erase(it);
        }
      }
      std::sort(col.begin(), col.end());
      adjacent_[i - 1][k] = std::move(col);
    }
  }
}

linalg::Matrix<std::int64_t> YoungNaturalRep::adjacent_matrix(int i) const {
  const auto f = static_cast<Eigen::Index>(dimension());
  linalg::Matrix<std::int64_t> m = linalg::Matrix<std::int64_t>::Zero(f, f);
  for (Eigen::Index k = 0; k < f; ++k)
    for (const auto& [r, v] : adjacent(i)[k]) m(r, k) = v;
  return m;
}

std::vector<Integer> YoungNaturalRep::apply_adjacent(int i, const std::vector<Integer>& v) const {
  std::vector<Integer> out(v.size());
  const std::vector<SparseColumn>& cols = adjacent_[i - 1];
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (const auto& [r, c] : cols[k]) out[r] += v[k] * c;
  }
  return out;
}

std::vector<Integer> YoungNaturalRep::apply(const Permutation& g, const std::vector<Integer>& v) const {
  if (g.size() != n_) throw DomainError("permutation degree differs from representation degree");
  // g = g' s_i whenever g(i) > g(i+1); peel such factors off the right.
  std::vector<int> img = g.images();
  std::vector<Integer> cur = v;
  for (bool again = true; again;) {
    again = false;
    for (int i = 1; i < n_; ++i)
      if (img[i - 1] > img[i]) {
        cur = apply_adjacent(i, cur);
        std::swap(img[i - 1], img[i]);
        again = true;
      }
  }
  return cur;
}

std::vector<Integer> YoungNaturalRep::apply(const AlgebraElement& e, const std::vector<Integer>& v, bool twist) const {
  std::vector<Integer> out(v.size());
  for (const auto& [g, c] : e.terms()) {
    if (boost::multiprecision::denominator(c) != 1) throw DomainError("integer coefficients required");
    Integer k = boost::multiprecision::numerator(c);
    if (twist && g.sign() < 0) k = -k;
    const std::vector<Integer> w = g.is_identity() ? v : apply(g, v);
    for (std::size_t r = 0; r < out.size(); ++r)
      if (w[r] != 0) out[r] += k * w[r];
  }
  return out;
}

std::vector<Integer> YoungNaturalRep::apply(const FactoredElement& f, const std::vector<Integer>& v, bool twist) const {
  std::vector<Integer> cur = v;
  for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) cur = apply(*it, cur, twist);
  return cur;
}

const YoungNaturalRep& young_natural_rep(const Partition& shape) {
  static std::shared_mutex mutex;
  static std::map<Partition, std::unique_ptr<YoungNaturalRep>> cache;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(shape);
    if (it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<YoungNaturalRep>(shape);
  std::unique_lock lock(mutex);
  return *cache.try_emplace(shape, std::move(built)).first->second;
}

std::uint64_t kostka_number(const Partition& shape, const std::vector<int>& content) {
  std::vector<int> parts;
  for (int c : content)
    if (c > 0) parts.push_back(c);
  if (partition_size(shape) != std::accumulate(parts.begin(), parts.end(), 0)) return 0;
  // Strip horizontal strips for the largest labels first.
  std::function<std::uint64_t(const Partition&, std::size_t)> rec = [&](const Partition& lam,
                                                                        std::size_t k) -> std::uint64_t {
    if (k == 0) return lam.empty() ? 1 : 0;
    const int m = parts[k - 1];
    std::uint64_t total = 0;
    Partition nu(lam.size());
    std::function<void(std::size_t, int)> pick = [&](std::size_t r, int left) {
      if (r == lam.size()) {
        if (left != 0) return;
        Partition trimmed;
        for (int x : nu)
          if (x > 0) trimmed.push_back(x);
        total += rec(trimmed, k - 1);
        return;
      }
      const int lo = r + 1 < lam.size() ? lam[r + 1] : 0;
      for (int x = lam[r]; x >= lo; --x) {
        const int take = lam[r] - x;
        if (take > left) break;
        nu[r] = x;
        pick(r + 1, left - take);
      }
    };
    pick(0, m);
    return total;
  };
  return rec(shape, parts.size());
}

std::int64_t multiplicity_targeted(const Diagram& d, const Partition& lambda) {
  const int n = static_cast<int>(d.size());
  if (!is_partition(lambda) || partition_size(lambda) != n)
    throw DomainError("partition " + to_string(lambda) + " does not match diagram size " + std::to_string(n));
  if (n == 0) return 1;
  std::vector<int> content;
  for (int r : d.occupied_rows()) content.push_back(d.row_length(r));
  const std::uint64_t kostka = kostka_number(lambda, content);
  if (kostka == 0) return 0;

  // Tensoring with the sign swaps a shape with its conjugate; use whichever
  // has the smaller column group.
  const Partition conj = conjugate(lambda);
  const bool twist = column_group_order(conj) < column_group_order(lambda);
  const YoungNaturalRep& rep = young_natural_rep(twist ? conj : lambda);
  const FactoredElement rows = row_group_sum(d);
  const FactoredElement cols = column_group_signed_sum(d);
  const std::size_t f = rep.dimension();

  // The image of the row sum has dimension equal to the Kostka number; once
  // random images reach that rank mod p they span it exactly.
  std::mt19937_64 rng(0x5eed + n);
  std::uniform_int_distribution<int> dist(-3, 3);
  linalg::ModEchelon echelon(f);
  std::vector<std::vector<Integer>> image;
  auto offer = [&](const std::vector<Integer>& w) {
    std::vector<Integer> u = rep.apply(rows, w, twist);
    std::vector<std::uint64_t> um(f);
    for (std::size_t k = 0; k < f; ++k) um[k] = linalg::mod_of(u[k]);
    if (echelon.insert(std::move(um))) image.push_back(std::move(u));
  };
  for (std::size_t attempt = 0; image.size() < kostka && attempt < 4 * kostka + 16; ++attempt) {
    std::vector<Integer> w(f);
    for (auto& x : w) x = dist(rng);
    offer(w);
  }
  for (std::size_t k = 0; image.size() < kostka && k < f; ++k) {
    std::vector<Integer> e(f);
    e[k] = 1;
    offer(e);
  }
  if (image.size() != kostka) throw ConsistencyError("row-sum image rank differs from the Kostka number");

  linalg::Matrix<Integer> m(static_cast<Eigen::Index>(f), static_cast<Eigen::Index>(image.size()));
  for (std::size_t c = 0; c < image.size(); ++c) {
    const std::vector<Integer> v = rep.apply(cols, image[c], twist);
    for (std::size_t r = 0; r < f; ++r) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v[r];
  }
  return static_cast<std::int64_t>(linalg::bareiss_rank(m));
}

MultiplicityVector decompose_targeted(const Diagram& d) {
  MultiplicityVector out;
  for (const Partition& lam : partitions_of(static_cast<int>(d.size()))) {
    const std::int64_t m = multiplicity_targeted(d, lam);
    if (m != 0) out[lam] = m;
  }
  return out;
}

}  // namespace specht
