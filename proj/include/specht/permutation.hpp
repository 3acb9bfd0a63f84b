#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace specht {

/// Bijection of {1..n}. Composition reads right to left: (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  /// Identity on {1..n}.
  explicit Permutation(int n);
  /// images[k] is the image of k+1 (1-based values). Throws DomainError if not a bijection.
  explicit Permutation(const std::vector<int>& images);

  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(img_.size()); }
  /// Image of x, both 1-based.
  int operator()(int x) const { return img_[x - 1] + 1; }
  std::vector<int> images() const;

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;
  int sign() const;
  /// Cycle lengths, weakly decreasing.
  std::vector<int> cycle_type() const;

  /// Position in the lexicographic listing of all n! permutations.
  std::uint64_t rank() const;
  static Permutation unrank(int n, std::uint64_t r);

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint8_t> img_;  // 0-based images
};

std::string to_string(const Permutation& p);

std::uint64_t factorial(int n);

/// All permutations of {1..n} indexed by lexicographic rank. n is at most 10.
class PermutationSpace {
 public:
  explicit PermutationSpace(int n);

  int degree() const { return n_; }
  std::size_t size() const { return perms_.size(); }
  const Permutation& at(std::size_t r) const { return perms_[r]; }
  std::size_t index(const Permutation& p) const { return static_cast<std::size_t>(p.rank()); }

  /// map[r] = index of g * at(r).
  std::vector<std::uint32_t> left_map(const Permutation& g) const;
  /// map[r] = index of at(r) * g.
  std::vector<std::uint32_t> right_map(const Permutation& g) const;

 private:
  int n_;
  std::vector<Permutation> perms_;
};

/// Shared spaces for n up to 8, built on first use.
const PermutationSpace& permutation_space(int n);

}  // namespace specht
