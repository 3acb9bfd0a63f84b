#include "specht/permutation.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>

#include "specht/errors.hpp"

namespace specht {

Permutation::Permutation(int n) : img_(n) {
  for (int k = 0; k < n; ++k) img_[k] = static_cast<std::uint8_t>(k);
}

Permutation::Permutation(const std::vector<int>& images) : img_(images.size()) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(n, false);
  for (int k = 0; k < n; ++k) {
    const int v = images[k];
    if (v < 1 || v > n || seen[v - 1]) throw DomainError("images do not form a permutation");
    seen[v - 1] = true;
    img_[k] = static_cast<std::uint8_t>(v - 1);
  }
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p(n);
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k) out[k] = img_[k] + 1;
  return out;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.size() != size()) throw DomainError("permutation degrees differ");
  Permutation out;
  out.img_.resize(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k) out.img_[k] = img_[other.img_[k]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.img_.resize(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k) out.img_[img_[k]] = static_cast<std::uint8_t>(k);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < img_.size(); ++k)
    if (img_[k] != k) return false;
  return true;
}

int Permutation::sign() const {
  const std::vector<int> ct = cycle_type();
  int even_cycles = 0;
  for (int c : ct)
    if (c % 2 == 0) ++even_cycles;
  return even_cycles % 2 == 0 ? 1 : -1;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t k = 0; k < img_.size(); ++k) {
    if (seen[k]) continue;
    int len = 0;
    for (std::size_t x = k; !seen[x]; x = img_[x]) {
      seen[x] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t Permutation::rank() const {
  const int n = size();
  std::uint64_t r = 0;
  std::uint32_t used = 0;
  for (int k = 0; k < n; ++k) {
    const std::uint32_t below = used & ((1U << img_[k]) - 1);
    const int smaller_unused = img_[k] - __builtin_popcount(below);
    r = r * static_cast<std::uint64_t>(n - k) + static_cast<std::uint64_t>(smaller_unused);
    used |= 1U << img_[k];
  }
  return r;
}

Permutation Permutation::unrank(int n, std::uint64_t r) {
  std::vector<int> digits(n);
  for (int k = n - 1; k >= 0; --k) {
    const std::uint64_t base = static_cast<std::uint64_t>(n - k);
    digits[k] = static_cast<int>(r % base);
    r /= base;
  }
  Permutation p;
  p.img_.resize(n);
  std::vector<int> pool(n);
  for (int k = 0; k < n; ++k) pool[k] = k;
  for (int k = 0; k < n; ++k) {
    p.img_[k] = static_cast<std::uint8_t>(pool[digits[k]]);
    pool.erase(pool.begin() + digits[k]);
  }
  return p;
}

std::string to_string(const Permutation& p) {
  std::string s = "[";
  for (int k = 1; k <= p.size(); ++k) {
    if (k > 1) s += ",";
    s += std::to_string(p(k));
  }
  return s + "]";
}

PermutationSpace::PermutationSpace(int n) : n_(n) {
  if (n < 0 || n > 10) throw CapacityError("permutation space of degree " + std::to_string(n));
  const std::uint64_t total = factorial(n);
  perms_.reserve(total);
  for (std::uint64_t r = 0; r < total; ++r) perms_.push_back(Permutation::unrank(n, r));
}

std::vector<std::uint32_t> PermutationSpace::left_map(const Permutation& g) const {
  std::vector<std::uint32_t> out(perms_.size());
  for (std::size_t r = 0; r < perms_.size(); ++r) out[r] = static_cast<std::uint32_t>((g * perms_[r]).rank());
  return out;
}

std::vector<std::uint32_t> PermutationSpace::right_map(const Permutation& g) const {
  std::vector<std::uint32_t> out(perms_.size());
  for (std::size_t r = 0; r < perms_.size(); ++r) out[r] = static_cast<std::uint32_t>((perms_[r] * g).rank());
  return out;
}

const PermutationSpace& permutation_space(int n) {
  static std::mutex mutex;
  static std::array<std::unique_ptr<PermutationSpace>, 9> spaces;
  if (n < 0 || n > 8) throw CapacityError("regular module of degree " + std::to_string(n) + " exceeds 8");
  std::lock_guard lock(mutex);
  if (!spaces[n]) spaces[n] = std::make_unique<PermutationSpace>(n);
  return *spaces[n];
}

}  // namespace specht
