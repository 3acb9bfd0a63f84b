#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "specht/numbers.hpp"

namespace specht::linalg {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Rank of an integer matrix by fraction-free elimination. Every division is
/// exact, so intermediate entries stay bounded by minors of the input.
template <class Scalar>
Eigen::Index bareiss_rank(Matrix<Scalar> m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Scalar prev = 1;
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index piv = rank;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) m.row(piv).swap(m.row(rank));
    const Scalar p = m(rank, c);
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      const Scalar f = m(i, c);
      for (Eigen::Index j = c + 1; j < cols; ++j) m(i, j) = (m(i, j) * p - f * m(rank, j)) / prev;
      m(i, c) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

/// Reduced row echelon form in place; returns the pivot columns.
template <class Scalar>
std::vector<Eigen::Index> rref(Matrix<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Scalar f = m(i, c);
      for (Eigen::Index j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Some x with a x = b, or nothing when the system is inconsistent.
template <class Scalar>
std::optional<Vector<Scalar>> solve(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
  Matrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const std::vector<Eigen::Index> pivots = rref(aug);
  Vector<Scalar> x = Vector<Scalar>::Zero(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == a.cols()) return std::nullopt;
    x(pivots[r]) = aug(static_cast<Eigen::Index>(r), a.cols());
  }
  return x;
}

// ---------------------------------------------------------------------------
// Arithmetic modulo the Mersenne prime 2^61 - 1.

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mod_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  const std::uint64_t lo = static_cast<std::uint64_t>(z & kPrime);
  const std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
  return mod_add(lo, hi);
}
inline std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e != 0; e >>= 1, a = mod_mul(a, a))
    if ((e & 1U) != 0) r = mod_mul(r, a);
  return r;
}
inline std::uint64_t mod_inv(std::uint64_t a) { return mod_pow(a, kPrime - 2); }
inline std::uint64_t mod_of(std::int64_t x) {
  const std::int64_t p = static_cast<std::int64_t>(kPrime);
  std::int64_t r = x % p;
  return static_cast<std::uint64_t>(r < 0 ? r + p : r);
}
std::uint64_t mod_of(const Integer& x);
/// Symmetric lift to (-p/2, p/2).
inline std::int64_t mod_lift(std::uint64_t a) {
  return a > kPrime / 2 ? -static_cast<std::int64_t>(kPrime - a) : static_cast<std::int64_t>(a);
}

/// Reduced row echelon basis over GF(p), grown one vector at a time.
/// Every stored row has a 1 at its pivot and 0 at every other pivot.
class ModEchelon {
 public:
  explicit ModEchelon(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<std::uint64_t>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v against the basis; the residue is what remains.
  void reduce(std::vector<std::uint64_t>& v) const;
  bool contains(std::vector<std::uint64_t> v) const;
  /// Adds v; true when the rank went up.
  bool insert(std::vector<std::uint64_t> v);

 private:
  std::size_t dim_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<std::uint64_t> to_mod(const std::vector<std::int64_t>& v);

}  // namespace specht::linalg
